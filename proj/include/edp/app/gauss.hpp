#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edp/algebra/multipoly.hpp"

namespace edp {

struct FixtureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GaussReport {
  std::vector<FixtureCheck> checks;

  bool pass() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

// Multiples of the generic point (s, c) on x^2 + y^2 + x^2 y^2 = 1 computed
// with the function field arithmetic, compared with the corrected formulas.
GaussReport run_gauss_fixture();

// Throws FixtureMismatch listing the failing checks.
void require_gauss_fixture();

// A factor of exact degree `degree` of a univariate integer polynomial, found
// by Kronecker's interpolation method, normalized to a positive constant term.
std::optional<MultiPoly> kronecker_factor(const MultiPoly& f, unsigned degree);

}  // namespace edp
