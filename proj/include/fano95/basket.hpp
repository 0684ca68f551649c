#pragma once

// Singularities of the general member: coordinate vertices and torus points
// on one-dimensional strata with non-trivial stabiliser.

#include "fano95/errors.hpp"
#include "fano95/monomials.hpp"
#include "fano95/quotient.hpp"
#include "fano95/weights.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fano95 {

struct BasketEntry {
  QuotientSingularity type;
  int count = 0;

  friend auto operator<=>(const BasketEntry&, const BasketEntry&) = default;
};

/// Multiset of terminal types, entries kept with the largest index first.
class Basket {
 public:
  Basket() = default;
  Basket(std::initializer_list<BasketEntry> entries) {
    for (const auto& e : entries) add(e.type, e.count);
  }

  void add(const QuotientSingularity& type, int count = 1) {
    if (count <= 0) return;
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const BasketEntry& e) { return e.type == type; });
    if (it != entries_.end()) {
      it->count += count;
      return;
    }
    entries_.push_back({type, count});
    std::sort(entries_.begin(), entries_.end(),
              [](const BasketEntry& x, const BasketEntry& y) { return x.type > y.type; });
  }

  const std::vector<BasketEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  int count(const QuotientSingularity& type) const {
    for (const auto& e : entries_)
      if (e.type == type) return e.count;
    return 0;
  }

  int total_points() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0,
                           [](int s, const BasketEntry& e) { return s + e.count; });
  }

  /// "1/3(1,1,2)×1, 1/2(1,1,1)×4"; "smooth" when empty.
  std::string str() const {
    if (entries_.empty()) return "smooth";
    std::string s;
    for (const auto& e : entries_) {
      if (!s.empty()) s += ", ";
      s += e.type.str() + "×" + std::to_string(e.count);
    }
    return s;
  }

  friend bool operator==(const Basket&, const Basket&) = default;

 private:
  std::vector<BasketEntry> entries_;
};

namespace detail {

template <std::size_t N>
std::array<int, 3> weights_except(const std::array<int, N>& w, std::size_t i, std::size_t j) {
  std::array<int, 3> out{};
  std::size_t k = 0;
  for (std::size_t v = 0; v < N; ++v)
    if (v != i && v != j) out[k++] = w[v];
  return out;
}

}  // namespace detail

/// Type of the vertex P_i (i indexes the five ambient weights), or nullopt
/// when a pure power of x_i has degree d so the general member misses P_i.
inline std::optional<QuotientSingularity> coordinate_point_singularity(const WeightSystem& ws,
                                                                         std::size_t i) {
  const auto w = ws.ambient();
  const int d = ws.degree();
  const int r = w.at(i);
  if (r < 2) throw std::invalid_argument("coordinate point needs weight >= 2");
  if (d % r == 0) return std::nullopt;

  std::optional<QuotientSingularity> type;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j == i || mod_pos(d - w[j], r) != 0 || d - w[j] < r) continue;
    // x_i^k x_j is in the equation, so x_j is eliminated near P_i.
    const auto t = normalize_quotient(r, detail::weights_except(w, i, j));
    if (type && *type != t)
      throw AmbiguousType("witnesses disagree at vertex of weight " + std::to_string(r) + " on " +
                          ws.str());
    type = t;
  }
  if (!type)
    throw NotQuasismooth("no monomial x_i^k x_j at vertex of weight " + std::to_string(r) +
                         " on " + ws.str());
  return type;
}

struct EdgeContribution {
  int count = 0;
  QuotientSingularity type;
};

/// Points of the general member in the torus of the line P_i P_j, where
/// g = gcd(w_i, w_j) >= 2. Their number is one less than the number of
/// degree-d monomials in x_i, x_j.
inline EdgeContribution edge_singularities(const WeightSystem& ws, std::size_t i, std::size_t j) {
  const auto w = ws.ambient();
  const int g = std::gcd(w.at(i), w.at(j));
  if (i == j || g < 2) throw std::invalid_argument("edge needs two coordinates with common factor");
  const std::array<int, 2> pair{w[i], w[j]};
  const auto monomials = monomials_of_degree(pair, ws.degree());
  if (monomials.empty())
    throw EdgeInX("edge of weights (" + std::to_string(w[i]) + "," + std::to_string(w[j]) +
                  ") lies in " + ws.str());
  const auto type = normalize_quotient(g, detail::weights_except(w, i, j));
  return {static_cast<int>(monomials.size()) - 1, type};
}

/// Full basket of the general member.
inline Basket compute_basket(const WeightSystem& ws) {
  const auto w = ws.ambient();
  Basket out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 2) continue;
    if (auto t = coordinate_point_singularity(ws, i)) out.add(*t);
  }
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (std::gcd(w[i], w[j]) < 2) continue;
      const auto edge = edge_singularities(ws, i, j);
      out.add(edge.type, edge.count);
    }
  return out;
}

}  // namespace fano95
