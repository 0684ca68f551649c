#pragma once

// Blow-up chains: rooted forests of Kawamata blow-ups over the basket of a
// family and over the points each blow-up creates.

#include "fano95/basket.hpp"
#include "fano95/blowup.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano95 {

/// One blow-up and the blow-ups performed at the points on its exceptional
/// divisor. Each child type occurs at most once per event.
struct BlowupEvent {
  QuotientSingularity point;
  std::vector<BlowupEvent> children;

  friend bool operator==(const BlowupEvent&, const BlowupEvent&) = default;
};

/// Canonical order: larger point first, then children lexicographically.
inline std::strong_ordering canonical_order(const BlowupEvent& x, const BlowupEvent& y) {
  if (auto c = y.point <=> x.point; c != 0) return c;
  const auto n = std::min(x.children.size(), y.children.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = canonical_order(x.children[i], y.children[i]); c != 0) return c;
  return x.children.size() <=> y.children.size();
}

inline bool canonical_less(const BlowupEvent& x, const BlowupEvent& y) {
  return canonical_order(x, y) < 0;
}

inline void canonicalize(std::vector<BlowupEvent>& forest) {
  for (auto& e : forest) canonicalize(e.children);
  std::sort(forest.begin(), forest.end(), canonical_less);
}

inline Rational total_drop(const BlowupEvent& e) {
  Rational s = blowup_drop(e.point);
  for (const auto& c : e.children) s += total_drop(c);
  return s;
}

inline Rational total_drop(const std::vector<BlowupEvent>& forest) {
  Rational s;
  for (const auto& e : forest) s += total_drop(e);
  return s;
}

inline std::size_t event_count(const std::vector<BlowupEvent>& forest) {
  std::size_t n = 0;
  for (const auto& e : forest) n += 1 + event_count(e.children);
  return n;
}

/// Nested text form, e.g. "1/11(1,3,8)[1/8(1,3,5)[1/5(1,2,3)]] + 1/2(1,1,1)".
inline std::string forest_str(const std::vector<BlowupEvent>& forest) {
  std::string s;
  for (const auto& e : forest) {
    if (!s.empty()) s += " + ";
    s += e.point.str();
    if (!e.children.empty()) s += "[" + forest_str(e.children) + "]";
  }
  return s;
}

struct BlowupChain {
  std::vector<BlowupEvent> roots;
  Rational running_kcube;
  /// Number of ways to realise the forest on the labelled basket points.
  std::uint64_t multiplicity = 1;

  friend bool operator==(const BlowupChain&, const BlowupChain&) = default;
};

namespace detail {

inline void check_event(const BlowupEvent& e) {
  const auto allowed = blowup_children(e.point);
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    const auto& c = e.children[i];
    if (std::find(allowed.begin(), allowed.end(), c.point) == allowed.end())
      throw std::invalid_argument(c.point.str() + " is not created by blowing up " + e.point.str());
    for (std::size_t j = 0; j < i; ++j)
      if (e.children[j].point == c.point)
        throw std::invalid_argument(c.point.str() + " blown up twice over " + e.point.str());
    check_event(c);
  }
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace detail

/// Validates a forest against a family's basket and fills in the running
/// degree and multiplicity. Throws std::invalid_argument for forests that
/// use more points of a type than exist, blow up non-existent points, or
/// overshoot.
inline BlowupChain make_chain(std::vector<BlowupEvent> roots, const Basket& basket,
                              const Rational& kcube) {
  canonicalize(roots);
  for (const auto& e : roots) detail::check_event(e);

  // Identical root trees per type, for the multiplicity count.
  std::uint64_t multiplicity = 1;
  for (const auto& entry : basket.entries()) {
    int used = 0;
    int available = entry.count;
    for (std::size_t i = 0; i < roots.size();) {
      if (roots[i].point != entry.type) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < roots.size() && roots[j] == roots[i]) ++j;
      const int same = static_cast<int>(j - i);
      if (used + same > entry.count)
        throw std::invalid_argument("forest uses more " + entry.type.str() + " points than exist");
      multiplicity *= detail::binomial(available, same);
      available -= same;
      used += same;
      i = j;
    }
  }
  for (const auto& e : roots)
    if (basket.count(e.point) == 0)
      throw std::invalid_argument(e.point.str() + " is not in the basket");

  Rational left = kcube - total_drop(roots);
  if (left.sign() < 0) throw std::invalid_argument("forest drops -K^3 below zero");
  return BlowupChain{std::move(roots), std::move(left), multiplicity};
}

/// Multiset of points still available for blowing up, with the remaining degree.
struct SearchState {
  Basket available;
  Rational kcube_left;
};

/// Builds a chain one blow-up at a time, in any order. Points are addressed
/// by their position in available(); equal types are interchangeable.
class ChainBuilder {
 public:
  ChainBuilder(const Basket& basket, Rational kcube) : basket_(basket), kcube_(std::move(kcube)) {
    for (const auto& e : basket.entries())
      for (int k = 0; k < e.count; ++k) slots_.push_back({e.type, -1});
  }

  struct Slot {
    QuotientSingularity type;
    int parent;  // node index, -1 for a basket point
  };

  const std::vector<Slot>& available() const { return slots_; }

  SearchState state() const {
    SearchState s{Basket{}, kcube_};
    for (const auto& slot : slots_) s.available.add(slot.type);
    for (const auto& n : nodes_) s.kcube_left -= blowup_drop(n.type);
    return s;
  }

  /// Blows up the slot-th available point.
  void blow_up(std::size_t slot) {
    const Slot s = slots_.at(slot);
    slots_.erase(slots_.begin() + static_cast<std::ptrdiff_t>(slot));
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({s.type, s.parent, {}});
    if (s.parent >= 0) nodes_[static_cast<std::size_t>(s.parent)].children.push_back(id);
    for (const auto& c : blowup_children(s.type)) slots_.push_back({c, id});
  }

  BlowupChain chain() const {
    std::vector<BlowupEvent> roots;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].parent < 0) roots.push_back(build(static_cast<int>(i)));
    return make_chain(std::move(roots), basket_, kcube_);
  }

 private:
  struct Node {
    QuotientSingularity type;
    int parent;
    std::vector<int> children;
  };

  BlowupEvent build(int id) const {
    const auto& n = nodes_[static_cast<std::size_t>(id)];
    BlowupEvent e{n.type, {}};
    for (int c : n.children) e.children.push_back(build(c));
    return e;
  }

  Basket basket_;
  Rational kcube_;
  std::vector<Slot> slots_;
  std::vector<Node> nodes_;
};

}  // namespace fano95
