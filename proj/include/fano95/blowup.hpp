#pragma once

// Kawamata weighted blow-up of a terminal point 1/r(1,a,b), b = r - a.
//
// The exceptional divisor E is P(1,a,b), -K drops by 1/(rab), the discrepancy
// is 1/r and E^3 = r^2/(ab). New singular points sit at the two non-trivial
// vertices of E: index a with weights (1, -r, b) and index b with (1, a, -r).

#include "fano95/quotient.hpp"
#include "fano95/rational.hpp"

#include <array>
#include <vector>

namespace fano95 {

struct BlowupResult {
  Rational drop;
  Rational discrepancy;
  Rational e_cube;
  std::array<int, 3> exceptional_weights{};
  std::vector<QuotientSingularity> children;
};

inline Rational blowup_drop(const QuotientSingularity& s) {
  return Rational(BigInt(1), BigInt(s.r) * s.a * s.b());
}

inline std::vector<QuotientSingularity> blowup_children(const QuotientSingularity& s) {
  std::vector<QuotientSingularity> out;
  const int r = s.r, a = s.a, b = s.b();
  if (a >= 2) out.push_back(normalize_quotient(a, {1, -r, b}));
  if (b >= 2) out.push_back(normalize_quotient(b, {1, a, -r}));
  return out;
}

inline BlowupResult kawamata_blowup(const QuotientSingularity& s) {
  BlowupResult out;
  out.drop = blowup_drop(s);
  out.discrepancy = Rational(1, s.r);
  out.e_cube = Rational(BigInt(s.r) * s.r, BigInt(s.a) * s.b());
  out.exceptional_weights = {1, s.a, s.b()};
  out.children = blowup_children(s);
  return out;
}

}  // namespace fano95
