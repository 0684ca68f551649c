#pragma once

// Monomials of fixed weighted degree (bounded knapsack over exponents).

#include <span>
#include <vector>

namespace fano95 {

using Exponents = std::vector<int>;

namespace detail {

inline void collect_monomials(std::span<const int> w, std::size_t i, int rest, Exponents& cur,
                              std::vector<Exponents>& out) {
  if (i + 1 == w.size()) {
    if (rest % w[i] == 0) {
      cur[i] = rest / w[i];
      out.push_back(cur);
    }
    return;
  }
  for (int e = rest / w[i]; e >= 0; --e) {
    cur[i] = e;
    collect_monomials(w, i + 1, rest - e * w[i], cur, out);
  }
}

}  // namespace detail

/// All exponent vectors e >= 0 with sum e_i w_i = d, largest leading
/// exponent first (lexicographically decreasing).
inline std::vector<Exponents> monomials_of_degree(std::span<const int> weights, int d) {
  std::vector<Exponents> out;
  if (weights.empty() || d < 0) return out;
  Exponents cur(weights.size(), 0);
  detail::collect_monomials(weights, 0, d, cur, out);
  return out;
}

/// Whether some monomial in the given weights has degree exactly d.
/// An empty weight list only reaches degree 0.
inline bool has_monomial_of_degree(std::span<const int> weights, int d) {
  if (d < 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(d) + 1, 0);
  reach[0] = 1;
  for (int w : weights)
    for (int s = w; s <= d; ++s)
      if (reach[static_cast<std::size_t>(s - w)]) reach[static_cast<std::size_t>(s)] = 1;
  return reach[static_cast<std::size_t>(d)] != 0;
}

}  // namespace fano95
