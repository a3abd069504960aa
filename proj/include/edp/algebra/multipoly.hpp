#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "edp/algebra/field.hpp"
#include "edp/algebra/fp.hpp"
#include "edp/algebra/integer.hpp"
#include "edp/errors.hpp"

namespace edp {

inline constexpr std::size_t kMaxVars = 8;

// Ordered list of variable names shared by every polynomial built over it.
// The order fixes the monomial order: the first name is the most significant.
class Variables {
 public:
  static std::shared_ptr<const Variables> of(std::vector<std::string> names);

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const std::string& name(std::size_t i) const { return names_.at(i); }

  friend bool operator==(const Variables& lhs, const Variables& rhs) {
    return lhs.names_ == rhs.names_;
  }

 private:
  explicit Variables(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using VarList = std::shared_ptr<const Variables>;

// Sparse polynomial in at most kMaxVars variables with integer coefficients.
// Terms are kept in descending graded lexicographic order with no zero
// coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using Exponents = std::array<std::uint32_t, kMaxVars>;
  struct Term {
    Exponents exps{};
    Int coeff;
  };

  MultiPoly();
  explicit MultiPoly(VarList vars);
  MultiPoly(VarList vars, std::vector<Term> terms);

  static MultiPoly constant(VarList vars, const Int& c);
  static MultiPoly variable(VarList vars, std::string_view name);
  static MultiPoly monomial(VarList vars, const Exponents& exps, const Int& c);

  const VarList& vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  // Value of the constant term (zero when absent).
  Int constant_term() const;
  const Term& leading_term() const;

  std::size_t var_index(std::string_view name) const;
  bool uses(std::size_t var) const;
  std::uint32_t degree(std::size_t var) const;
  // Smallest exponent of `var` over all terms; 0 for the zero polynomial.
  std::uint32_t min_degree(std::size_t var) const;
  std::uint32_t total_degree() const;
  Int content() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Int& c);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Int& c) { return lhs *= c; }
  friend MultiPoly operator*(const Int& c, MultiPoly rhs) { return rhs *= c; }
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

  MultiPoly pow(unsigned exponent) const;
  // Multiplies every term by the given monomial.
  MultiPoly shift(const Exponents& exps) const;
  // Divides every coefficient exactly by c. Throws NotExactlyDivisible.
  MultiPoly divide_coefficients(const Int& c) const;

  // Coefficients with respect to one variable, indexed by its exponent. The
  // coefficients keep the full variable list.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, VarList vars,
                                     std::size_t var);

  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  // Renames variables (a permutation or a partial renaming), e.g. a -> d, d -> a.
  MultiPoly rename(const std::map<std::string, std::string>& mapping) const;
  // Coefficients reduced into [0, p); terms that vanish are dropped.
  MultiPoly reduce_mod(const Int& p) const;
  // Re-expresses the polynomial over a list that contains all used variables.
  MultiPoly with_variables(const VarList& vars) const;

  template <FieldElement F>
  F evaluate(const std::vector<F>& values, const F& like) const;
  Fp evaluate(const std::map<std::string, Fp>& bindings) const;

  std::string to_string() const;
  static MultiPoly parse(std::string_view text, const VarList& vars = nullptr);
  nlohmann::json to_json() const;
  static MultiPoly from_json(const nlohmann::json& j, const VarList& vars = nullptr);

 private:
  void canonicalize();
  void check_var(std::size_t var) const;

  VarList vars_;
  std::vector<Term> terms_;
};

// Descending graded lexicographic comparison: true when a sorts before b.
bool grlex_greater(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b);

// Union of two variable lists: lhs order first, then the new names of rhs.
VarList merge_variables(const VarList& lhs, const VarList& rhs);

// Exact quotient f / g. Throws DivisionByZero for g = 0 and NotExactlyDivisible
// when g does not divide f.
MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g);

// Quotient when g divides f, nothing otherwise.
std::optional<MultiPoly> try_exact_div(const MultiPoly& f, const MultiPoly& g);

// Greatest common divisor over Z[vars], normalized to a positive leading
// coefficient. gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

template <FieldElement F>
F MultiPoly::evaluate(const std::vector<F>& values, const F& like) const {
  if (values.size() < vars_->size()) throw UnboundVariable("not every variable has a value");
  std::vector<std::vector<F>> powers(vars_->size());
  for (std::size_t v = 0; v < vars_->size(); ++v) {
    const std::uint32_t top = degree(v);
    powers[v].reserve(top + 1);
    powers[v].push_back(like.from_int(Int(1)));
    for (std::uint32_t e = 1; e <= top; ++e) powers[v].push_back(powers[v].back() * values[v]);
  }
  F sum = like.from_int(Int(0));
  for (const Term& t : terms_) {
    F prod = like.from_int(t.coeff);
    for (std::size_t v = 0; v < vars_->size(); ++v) {
      if (t.exps[v] != 0) prod = prod * powers[v][t.exps[v]];
    }
    sum = sum + prod;
  }
  return sum;
}

}  // namespace edp
