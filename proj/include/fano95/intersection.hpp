#pragma once

// Triple intersection numbers on a tower of Kawamata blow-ups.
//
// Classes are written in the basis {D0, E1, ..., Ek} where D0 is the pullback
// of a class on the base and Ei the pullback to the top of the i-th
// exceptional divisor. Mixed products of distinct basis classes vanish by the
// projection formula, so the product is diagonal.

#include "fano95/chain.hpp"
#include "fano95/errors.hpp"

#include <string>
#include <vector>

namespace fano95 {

struct TowerContext {
  Rational d0_cube;
  std::vector<Rational> e_cubes;

  std::size_t size() const { return e_cubes.size(); }
};

struct DivisorClass {
  Rational c0;
  std::vector<Rational> c;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline DivisorClass operator*(const Rational& s, DivisorClass d) {
  d.c0 *= s;
  for (auto& x : d.c) x *= s;
  return d;
}

inline DivisorClass operator+(DivisorClass x, const DivisorClass& y) {
  if (x.c.size() != y.c.size()) throw DimensionMismatch("adding classes of different length");
  x.c0 += y.c0;
  for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] += y.c[i];
  return x;
}

inline Rational triple_product(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c,
                               const TowerContext& ctx) {
  const auto k = ctx.size();
  if (a.c.size() != k || b.c.size() != k || c.c.size() != k)
    throw DimensionMismatch("classes of length " + std::to_string(a.c.size()) + "/" +
                            std::to_string(b.c.size()) + "/" + std::to_string(c.c.size()) +
                            " against a tower with " + std::to_string(k) + " exceptional divisors");
  Rational s = a.c0 * b.c0 * c.c0 * ctx.d0_cube;
  for (std::size_t i = 0; i < k; ++i) s += a.c[i] * b.c[i] * c.c[i] * ctx.e_cubes[i];
  return s;
}

namespace detail {

template <typename F>
void for_each_event(const std::vector<BlowupEvent>& forest, F&& f) {
  for (const auto& e : forest) {
    f(e);
    for_each_event(e.children, f);
  }
}

}  // namespace detail

/// Context of the tower built by a chain, exceptionals in pre-order.
inline TowerContext tower_context(const std::vector<BlowupEvent>& forest, const Rational& base_kcube) {
  TowerContext ctx{base_kcube, {}};
  detail::for_each_event(forest, [&](const BlowupEvent& e) {
    ctx.e_cubes.push_back(kawamata_blowup(e.point).e_cube);
  });
  return ctx;
}

inline TowerContext tower_context(const BlowupChain& chain, const Rational& base_kcube) {
  return tower_context(chain.roots, base_kcube);
}

/// -K of the top of the tower: pi^*(-K) - sum (1/r_i) E_i.
inline DivisorClass anticanonical_class(const std::vector<BlowupEvent>& forest) {
  DivisorClass k{Rational(1), {}};
  detail::for_each_event(forest, [&](const BlowupEvent& e) { k.c.push_back(-Rational(1, e.point.r)); });
  return k;
}

inline DivisorClass anticanonical_class(const BlowupChain& chain) {
  return anticanonical_class(chain.roots);
}

}  // namespace fano95
