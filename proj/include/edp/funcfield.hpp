#pragma once

#include <map>
#include <memory>
#include <string>

#include "edp/algebra/fp.hpp"
#include "edp/algebra/ratfunc.hpp"

namespace edp {

// root^2 = square, where square is a rational function of the base
// variables. For the Edwards curve over y: x^2 = (1 - y^2)/(a - d y^2).
struct CurveRelation {
  VarList base_vars;
  std::string root;
  RatFunc square;

  // Generic curve: coefficients in Q(a, d, y), root x.
  static std::shared_ptr<const CurveRelation> edwards_generic();
  // Fixed integer a, d over the y-coordinate: root^2 = (1 - b^2)/(a - d b^2)
  // where b names the y-coordinate and root the x-coordinate.
  static std::shared_ptr<const CurveRelation> edwards_over_y(const Int& a, const Int& d,
                                                             const std::string& root,
                                                             const std::string& base);
  // Over the x-coordinate: root^2 = (1 - a b^2)/(1 - d b^2), root the y-coordinate.
  static std::shared_ptr<const CurveRelation> edwards_over_x(const Int& a, const Int& d,
                                                             const std::string& root,
                                                             const std::string& base);
};

using RelationPtr = std::shared_ptr<const CurveRelation>;

// p + root * q in the quadratic extension defined by the relation.
class FunctionFieldElement {
 public:
  FunctionFieldElement(RelationPtr rel, RatFunc p, RatFunc q);
  static FunctionFieldElement base(const RelationPtr& rel, const RatFunc& p);
  static FunctionFieldElement root(const RelationPtr& rel);

  const RatFunc& p() const noexcept { return p_; }
  const RatFunc& q() const noexcept { return q_; }
  const RelationPtr& relation() const noexcept { return rel_; }

  friend FunctionFieldElement operator+(const FunctionFieldElement& l, const FunctionFieldElement& r);
  friend FunctionFieldElement operator-(const FunctionFieldElement& l, const FunctionFieldElement& r);
  friend FunctionFieldElement operator*(const FunctionFieldElement& l, const FunctionFieldElement& r);
  // Multiplies above and below by the conjugate p - root*q. Throws
  // DegenerateDenominator when the divisor is zero on the curve.
  friend FunctionFieldElement operator/(const FunctionFieldElement& l, const FunctionFieldElement& r);
  FunctionFieldElement operator-() const;
  friend bool operator==(const FunctionFieldElement& l, const FunctionFieldElement& r) {
    return l.p_ == r.p_ && l.q_ == r.q_;
  }

  bool is_zero() const noexcept { return p_.is_zero() && q_.is_zero(); }
  FunctionFieldElement from_int(const Int& v) const;
  FunctionFieldElement inverse() const;
  std::string to_string() const;

 private:
  RelationPtr rel_;
  RatFunc p_;
  RatFunc q_;
};

enum class FormMode { XForm, InverseXForm };

// g = p + x q (XForm) or g = p + q / x (InverseXForm), p and q in the base.
struct UniqueForm {
  RatFunc p;
  RatFunc q;
  FormMode mode = FormMode::XForm;

  std::string to_string() const;
  friend bool operator==(const UniqueForm& l, const UniqueForm& r) {
    return l.p == r.p && l.q == r.q && l.mode == r.mode;
  }
};

// Rewrites a rational function in the root and base variables: the root's
// square is replaced in numerator and denominator until both are linear in
// the root, then one conjugate multiplication clears the denominator. Throws
// DegenerateDenominator when the denominator vanishes on the curve.
UniqueForm to_unique_form(const RatFunc& g, FormMode mode = FormMode::XForm,
                          const RelationPtr& rel = CurveRelation::edwards_generic());

// Switches modes with q' = root^2 * q; the inverse direction divides.
UniqueForm mode_convert(const UniqueForm& u, const RelationPtr& rel = CurveRelation::edwards_generic());

// Value at a point given by bindings for the base variables and the root.
// Throws DivisionByZero when a denominator vanishes there.
Fp evaluate_form(const UniqueForm& u, const std::map<std::string, Fp>& bindings,
                 const RelationPtr& rel = CurveRelation::edwards_generic());

}  // namespace edp
