#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "edp/algebra/expr.hpp"
#include "edp/algebra/fp.hpp"
#include "edp/algebra/multipoly.hpp"

namespace edp {

// num/den over Z[vars] with gcd(num, den) = 1 and a positive leading
// coefficient in den. Zero is 0/1.
class RatFunc {
 public:
  RatFunc();
  explicit RatFunc(MultiPoly num);
  // Normalizes. Throws ZeroDenominator when den = 0.
  RatFunc(const MultiPoly& num, const MultiPoly& den);

  static RatFunc constant(const VarList& vars, const Int& num, const Int& den = Int(1));

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }
  const VarList& vars() const noexcept { return num_.vars(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant() && den_.constant_term() == 1; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& lhs, const RatFunc& rhs);
  friend RatFunc operator-(const RatFunc& lhs, const RatFunc& rhs);
  friend RatFunc operator*(const RatFunc& lhs, const RatFunc& rhs);
  // Throws ZeroDenominator when rhs = 0.
  friend RatFunc operator/(const RatFunc& lhs, const RatFunc& rhs);
  friend bool operator==(const RatFunc& lhs, const RatFunc& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  RatFunc pow(unsigned exponent) const;
  RatFunc from_int(const Int& v) const { return constant(vars(), v); }
  // Throws ZeroDenominator for zero.
  RatFunc inverse() const;

  RatFunc substitute(std::size_t var, const RatFunc& value) const;
  RatFunc with_variables(const VarList& vars) const;

  // Throws UnboundVariable, or DivisionByZero when den vanishes.
  Fp evaluate(const std::map<std::string, Fp>& bindings) const;

  std::string to_string() const;
  static RatFunc parse(std::string_view text, const VarList& vars = nullptr);
  static RatFunc from_expr(const Expr& e, const VarList& vars);
  nlohmann::json to_json() const;
  static RatFunc from_json(const nlohmann::json& j, const VarList& vars = nullptr);

 private:
  struct Reduced {};
  RatFunc(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  MultiPoly num_;
  MultiPoly den_;
};

RatFunc ratfunc_normalize(const MultiPoly& num, const MultiPoly& den);

}  // namespace edp
