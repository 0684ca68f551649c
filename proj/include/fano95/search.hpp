#pragma once

// Exhaustive search for blow-up chains that bring -K^3 to exactly zero.

#include "fano95/chain.hpp"
#include "fano95/families.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace fano95 {

struct SearchStats {
  std::uint64_t states_visited = 0;
  std::size_t max_events = 0;
};

namespace detail {

struct WeightedTree {
  BlowupEvent event;
  Rational drop;
};

/// Every tree rooted at `type` whose total drop is at most `budget`.
inline std::vector<WeightedTree> rooted_trees(const QuotientSingularity& type,
                                              const Rational& budget, SearchStats& stats) {
  ++stats.states_visited;
  const Rational own = blowup_drop(type);
  if (own > budget) return {};
  std::vector<WeightedTree> partial{{BlowupEvent{type, {}}, own}};
  for (const auto& child : blowup_children(type)) {
    const auto options = rooted_trees(child, budget - own, stats);
    std::vector<WeightedTree> next = partial;  // child left alone
    for (const auto& p : partial)
      for (const auto& o : options) {
        Rational drop = p.drop + o.drop;
        if (drop > budget) continue;
        WeightedTree t = p;
        t.event.children.push_back(o.event);
        t.drop = std::move(drop);
        next.push_back(std::move(t));
      }
    partial = std::move(next);
  }
  for (auto& t : partial) canonicalize(t.event.children);
  std::sort(partial.begin(), partial.end(), [](const WeightedTree& x, const WeightedTree& y) {
    if (x.drop != y.drop) return x.drop < y.drop;
    return canonical_less(x.event, y.event);
  });
  return partial;
}

struct ForestSearch {
  const Basket& basket;
  const Rational& kcube;
  std::vector<std::vector<WeightedTree>> trees;  // per basket entry, by drop
  std::vector<Rational> min_drop_from;           // suffix minimum of root drops
  std::vector<BlowupEvent> current;
  std::vector<std::vector<BlowupEvent>> found;
  SearchStats& stats;

  void group(std::size_t g, const Rational& left) {
    ++stats.states_visited;
    if (left.is_zero()) {
      found.push_back(current);
      stats.max_events = std::max(stats.max_events, event_count(current));
      return;
    }
    if (g == trees.size() || min_drop_from[g] > left) return;
    pick(g, 0, basket.entries()[g].count, left);
  }

  // Chooses a multiset of trees for group g by non-decreasing index.
  void pick(std::size_t g, std::size_t start, int slots, const Rational& left) {
    group(g + 1, left);
    if (slots == 0) return;
    const auto& options = trees[g];
    for (std::size_t i = start; i < options.size(); ++i) {
      if (options[i].drop > left) break;
      current.push_back(options[i].event);
      pick(g, i, slots - 1, left - options[i].drop);
      current.pop_back();
    }
  }
};

}  // namespace detail

/// All zero-chains over a basket with starting degree kcube, canonical and
/// distinct, in canonical order.
inline std::vector<BlowupChain> find_chains(const Basket& basket, const Rational& kcube,
                                            SearchStats* stats_out = nullptr) {
  SearchStats stats;
  detail::ForestSearch search{basket, kcube, {}, {}, {}, {}, stats};
  for (const auto& e : basket.entries())
    search.trees.push_back(detail::rooted_trees(e.type, kcube, stats));
  search.min_drop_from.assign(search.trees.size() + 1, Rational());
  // A sentinel larger than any budget for the empty suffix.
  search.min_drop_from.back() = kcube + Rational(1);
  for (std::size_t g = search.trees.size(); g-- > 0;) {
    const Rational own = blowup_drop(basket.entries()[g].type);
    search.min_drop_from[g] = std::min(own, search.min_drop_from[g + 1]);
  }
  if (kcube.sign() > 0) search.group(0, kcube);

  std::vector<BlowupChain> out;
  out.reserve(search.found.size());
  for (auto& forest : search.found) out.push_back(make_chain(std::move(forest), basket, kcube));
  std::sort(out.begin(), out.end(), [](const BlowupChain& x, const BlowupChain& y) {
    return std::lexicographical_compare(x.roots.begin(), x.roots.end(), y.roots.begin(),
                                        y.roots.end(), canonical_less);
  });
  if (stats_out) *stats_out = stats;
  return out;
}

inline std::vector<BlowupChain> find_chains(const FanoFamily& f, SearchStats* stats = nullptr) {
  return find_chains(f.basket, f.kcube, stats);
}

/// Families 1 and 2 carry elliptic fibrations from curve centres (projection
/// from a line, and the double cover of P^3) that no chain of point blow-ups
/// produces; they are listed here rather than searched.
inline bool is_curve_center_exception(int n) { return n == 1 || n == 2; }

inline bool has_elliptic_fibration(const FanoFamily& f) {
  return is_curve_center_exception(f.n) || !find_chains(f).empty();
}

inline bool has_elliptic_fibration(int n) { return has_elliptic_fibration(family(n)); }

struct Classification {
  std::vector<int> no_chain;
  std::vector<int> no_fibration;
  std::vector<std::vector<BlowupChain>> chains;  // indexed by n - 1
};

inline Classification classify_all(const std::vector<FanoFamily>& families = standard_families()) {
  Classification c;
  for (const auto& f : families) {
    auto chains = find_chains(f);
    if (chains.empty()) c.no_chain.push_back(f.n);
    if (chains.empty() && !is_curve_center_exception(f.n)) c.no_fibration.push_back(f.n);
    c.chains.push_back(std::move(chains));
  }
  return c;
}

/// Bases P(1,x,y) of the elliptic fibrations constructed explicitly for a
/// family; P^2 is written (1,1,1). The natural projection to P(1,a1,a2)
/// works outside the listed exceptions, the projection to P(1,a1,a3) for
/// the families of the form t z^k + ... or w^2 t + ..., and three families
/// carry one more special map. Coinciding bases are listed once.
inline std::vector<std::array<int, 3>> fibration_targets(const FanoFamily& f) {
  static constexpr std::array kNone{3, 60, 75, 84, 87, 93};
  static constexpr std::array kThirdWeight{7, 9, 20, 30, 36, 44, 49, 51, 64};
  const int n = f.n;
  const auto& a = f.weights.a();
  std::vector<std::array<int, 3>> out;
  if (std::find(kNone.begin(), kNone.end(), n) != kNone.end()) return out;
  if (is_curve_center_exception(n)) {
    out.push_back({1, 1, 1});
    return out;
  }
  out.push_back({1, a[0], a[1]});
  if (std::find(kThirdWeight.begin(), kThirdWeight.end(), n) != kThirdWeight.end())
    out.push_back({1, a[0], a[2]});
  switch (n) {
    case 17: out.push_back({1, 1, 4}); break;
    case 26: out.push_back({1, 1, 6}); break;
    case 31: out.push_back({1, 1, 6}); break;
    default: break;
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::array<int, 3>> fibration_targets(int n) {
  if (n < 1 || n > static_cast<int>(standard_families().size())) return {};
  return fibration_targets(family(n));
}

}  // namespace fano95
