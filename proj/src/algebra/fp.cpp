#include "edp/algebra/fp.hpp"

#include "edp/errors.hpp"

namespace edp {

FieldPtr PrimeField::create(const Int& p) {
  if (p <= 3) throw InvalidModulus("modulus must be a prime greater than 3, got " + to_string(p));
  if (!is_prime(p)) throw InvalidModulus("modulus " + to_string(p) + " is not prime");
  return FieldPtr(new PrimeField(p));
}

Fp::Fp(FieldPtr field, const Int& value) : field_(std::move(field)) {
  mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), field_->modulus().get_mpz_t());
}

Fp::Fp(FieldPtr field, long value) : Fp(std::move(field), Int(value)) {}

void Fp::check_same_field(const Fp& other) const {
  if (field_ != other.field_ && field_->modulus() != other.field_->modulus()) {
    throw FieldMismatch("operands live in different prime fields");
  }
}

Fp Fp::operator-() const {
  Fp out(*this);
  if (out.value_ != 0) out.value_ = modulus() - out.value_;
  return out;
}

Fp& Fp::operator+=(const Fp& rhs) {
  check_same_field(rhs);
  value_ += rhs.value_;
  if (value_ >= modulus()) value_ -= modulus();
  return *this;
}

Fp& Fp::operator-=(const Fp& rhs) {
  check_same_field(rhs);
  value_ -= rhs.value_;
  if (value_ < 0) value_ += modulus();
  return *this;
}

Fp& Fp::operator*=(const Fp& rhs) {
  check_same_field(rhs);
  mpz_mul(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), modulus().get_mpz_t());
  return *this;
}

Fp& Fp::operator/=(const Fp& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Fp& lhs, const Fp& rhs) {
  lhs.check_same_field(rhs);
  return lhs.value_ == rhs.value_;
}

Fp Fp::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in F_" + edp::to_string(modulus()));
  Fp out(*this);
  mpz_invert(out.value_.get_mpz_t(), value_.get_mpz_t(), modulus().get_mpz_t());
  return out;
}

Fp Fp::pow(const Int& exponent) const {
  Fp out(*this);
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_powm(out.value_.get_mpz_t(), value_.get_mpz_t(), exponent.get_mpz_t(),
           modulus().get_mpz_t());
  return out;
}

bool Fp::is_square() const {
  if (is_zero()) return true;
  return mpz_legendre(value_.get_mpz_t(), modulus().get_mpz_t()) == 1;
}

std::optional<Fp> Fp::sqrt() const {
  if (is_zero()) return *this;
  if (!is_square()) return std::nullopt;
  const Int& p = modulus();
  // p - 1 = q * 2^s with q odd.
  Int q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
  if (s == 1) return pow((p + 1) / 4);

  Fp z = from_int(2);
  while (z.is_square()) z = z + from_int(1);
  Fp c = z.pow(q);
  Fp t = pow(q);
  Fp r = pow((q + 1) / 2);
  unsigned long m = s;
  const Fp one = from_int(1);
  while (!(t == one)) {
    unsigned long i = 0;
    Fp probe = t;
    while (!(probe == one)) {
      probe = probe * probe;
      ++i;
    }
    Fp b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  return r;
}

Fp random_element(const FieldPtr& field, std::mt19937_64& rng) {
  return Fp(field, random_below(rng, field->modulus()));
}

}  // namespace edp
