#pragma once

#include <random>
#include <string>

#include "edp/algebra/expr.hpp"
#include "edp/algebra/multipoly.hpp"

namespace edp::testing {

inline MultiPoly random_poly(std::mt19937_64& rng, const VarList& vars, int terms, int max_exp,
                             long coeff_bound) {
  std::vector<MultiPoly::Term> out;
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  for (int i = 0; i < terms; ++i) {
    MultiPoly::Term t;
    for (std::size_t v = 0; v < vars->size(); ++v) t.exps[v] = static_cast<std::uint32_t>(exp(rng));
    t.coeff = coeff(rng);
    out.push_back(t);
  }
  return MultiPoly(vars, out);
}

inline std::string random_expression(std::mt19937_64& rng, int depth) {
  return random_expression_text(rng, depth);
}

}  // namespace edp::testing
