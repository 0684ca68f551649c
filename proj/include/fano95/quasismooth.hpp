#pragma once

#include "fano95/monomials.hpp"
#include "fano95/weights.hpp"

#include <bit>
#include <vector>

namespace fano95 {

/// Combinatorial quasismoothness of the general member of degree d. For every
/// nonempty set I of variables, either a degree-d monomial in I exists, or at
/// least |I| variables e outside I admit a degree-d monomial m * x_e with m in I.
inline bool is_quasismooth_general(const WeightSystem& w) {
  const auto weights = w.ambient();
  const int d = w.degree();
  constexpr unsigned kVars = 5;
  for (unsigned mask = 1; mask < (1u << kVars); ++mask) {
    std::vector<int> inside;
    for (unsigned v = 0; v < kVars; ++v)
      if (mask & (1u << v)) inside.push_back(weights[v]);
    if (has_monomial_of_degree(inside, d)) continue;
    int escapes = 0;
    for (unsigned e = 0; e < kVars; ++e) {
      if (mask & (1u << e)) continue;
      // m may not be constant: no single variable has weight d.
      const int rest = d - weights[e];
      if (rest > 0 && has_monomial_of_degree(inside, rest)) ++escapes;
    }
    if (escapes < std::popcount(mask)) return false;
  }
  return true;
}

}  // namespace fano95
