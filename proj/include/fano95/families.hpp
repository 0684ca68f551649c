#pragma once

// The 95 families of quasismooth terminal Fano hypersurfaces
// X_d in P(1, a1, a2, a3, a4) with d = a1 + a2 + a3 + a4.

#include "fano95/basket.hpp"
#include "fano95/quasismooth.hpp"
#include "fano95/weights.hpp"

#include <optional>
#include <vector>

namespace fano95 {

inline constexpr int kDefaultDegreeBound = 100;

struct FanoFamily {
  int n = 0;
  WeightSystem weights;
  Rational kcube;
  Basket basket;

  int degree() const { return weights.degree(); }
};

/// Candidate weight systems of degree d passing all filters, or nullopt.
inline std::optional<FanoFamily> make_family(const WeightSystem& w) {
  if (!is_quasismooth_general(w)) return std::nullopt;
  try {
    return FanoFamily{0, w, minus_k_cubed(w), compute_basket(w)};
  } catch (const Error&) {
    // Non-terminal vertex, or a stratum not cut properly.
    return std::nullopt;
  }
}

/// Every family with 4 <= d <= d_max, ordered by degree then weights
/// lexicographically, numbered from 1.
inline std::vector<FanoFamily> enumerate_families(int d_max = kDefaultDegreeBound) {
  std::vector<FanoFamily> out;
  for (int d = 4; d <= d_max; ++d)
    for (int a1 = 1; 4 * a1 <= d; ++a1)
      for (int a2 = a1; a1 + 3 * a2 <= d; ++a2)
        for (int a3 = a2; a1 + a2 + 2 * a3 <= d; ++a3) {
          const std::array<int, 4> a{a1, a2, a3, d - a1 - a2 - a3};
          if (!WeightSystem::isolated(a)) continue;
          if (auto f = make_family(WeightSystem(a))) out.push_back(std::move(*f));
        }
  // The loops already produce (d, a) in increasing order.
  for (std::size_t i = 0; i < out.size(); ++i) out[i].n = static_cast<int>(i) + 1;
  return out;
}

/// Entry number of w within an enumeration, or nullopt.
inline std::optional<int> entry_number(const std::vector<FanoFamily>& families,
                                       const WeightSystem& w) {
  for (const auto& f : families)
    if (f.weights == w) return f.n;
  return std::nullopt;
}

/// The enumeration at the default bound, computed once.
inline const std::vector<FanoFamily>& standard_families() {
  static const std::vector<FanoFamily> families = enumerate_families(kDefaultDegreeBound);
  return families;
}

inline const FanoFamily& family(int n) {
  const auto& all = standard_families();
  if (n < 1 || n > static_cast<int>(all.size()))
    throw std::out_of_range("family number out of range: " + std::to_string(n));
  return all[static_cast<std::size_t>(n) - 1];
}

}  // namespace fano95
