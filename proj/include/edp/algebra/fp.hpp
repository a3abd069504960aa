#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>

#include "edp/algebra/integer.hpp"

namespace edp {

class PrimeField;
using FieldPtr = std::shared_ptr<const PrimeField>;

// The prime field F_p. Only odd primes p > 3 below primality_bound() are
// accepted: the curve conversions divide by 48 and 864.
class PrimeField {
 public:
  static FieldPtr create(const Int& p);

  const Int& modulus() const noexcept { return modulus_; }

 private:
  explicit PrimeField(Int p) : modulus_(std::move(p)) {}
  Int modulus_;
};

// Element of F_p, always stored reduced into [0, p).
class Fp {
 public:
  Fp(FieldPtr field, const Int& value);
  Fp(FieldPtr field, long value);

  const Int& value() const noexcept { return value_; }
  const FieldPtr& field() const noexcept { return field_; }
  const Int& modulus() const noexcept { return field_->modulus(); }

  bool is_zero() const { return value_ == 0; }
  Fp from_int(const Int& v) const { return Fp(field_, v); }
  Fp inverse() const;
  Fp pow(const Int& exponent) const;
  bool is_square() const;
  // Some square root when one exists (Tonelli-Shanks).
  std::optional<Fp> sqrt() const;
  std::string to_string() const { return value_.get_str(10); }

  Fp operator-() const;
  Fp& operator+=(const Fp& rhs);
  Fp& operator-=(const Fp& rhs);
  Fp& operator*=(const Fp& rhs);
  Fp& operator/=(const Fp& rhs);

  friend Fp operator+(Fp lhs, const Fp& rhs) { return lhs += rhs; }
  friend Fp operator-(Fp lhs, const Fp& rhs) { return lhs -= rhs; }
  friend Fp operator*(Fp lhs, const Fp& rhs) { return lhs *= rhs; }
  friend Fp operator/(Fp lhs, const Fp& rhs) { return lhs /= rhs; }
  friend bool operator==(const Fp& lhs, const Fp& rhs);

 private:
  void check_same_field(const Fp& other) const;

  Int value_;
  FieldPtr field_;
};

Fp random_element(const FieldPtr& field, std::mt19937_64& rng);

}  // namespace edp
