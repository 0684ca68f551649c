#pragma once

// Terminal cyclic quotient singularities 1/r(1,a,r-a).

#include "fano95/errors.hpp"

#include <array>
#include <compare>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>

namespace fano95 {

/// Canonical terminal type 1/r(1, a, r-a) with gcd(a, r) = 1 and a <= r - a.
struct QuotientSingularity {
  int r = 2;
  int a = 1;

  constexpr int b() const { return r - a; }

  std::string str() const {
    return "1/" + std::to_string(r) + "(1," + std::to_string(a) + "," + std::to_string(b()) + ")";
  }

  friend constexpr auto operator<=>(const QuotientSingularity&, const QuotientSingularity&) = default;
  friend std::ostream& operator<<(std::ostream& os, const QuotientSingularity& s) { return os << s.str(); }
};

/// Least nonnegative residue, valid for negative inputs.
constexpr int mod_pos(long long x, int m) {
  const long long q = x % m;
  return static_cast<int>(q < 0 ? q + m : q);
}

namespace detail {

/// Returns the a of the form {1, a, r-a} attainable under the unit u, if any.
constexpr std::optional<int> canonical_under_unit(int r, const std::array<int, 3>& w, int u) {
  std::array<int, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) v[i] = mod_pos(static_cast<long long>(u) * w[i], r);
  // Any entry may play the role of the 1; the other two must be opposite units.
  for (std::size_t one = 0; one < 3; ++one) {
    if (v[one] != 1 % r) continue;
    const int x = v[(one + 1) % 3];
    const int y = v[(one + 2) % 3];
    if (x == 0 || (x + y) % r != 0 || std::gcd(x, r) != 1) continue;
    return std::min(x, r - x);
  }
  return std::nullopt;
}

}  // namespace detail

/// Brings a terminal cyclic quotient 1/r(w0,w1,w2) to canonical form by
/// searching the unit group of Z/r. Weights may be any integers; they are
/// reduced mod r first. Throws NonTerminal if no unit works.
inline QuotientSingularity normalize_quotient(int r, std::array<int, 3> raw) {
  if (r < 2) throw NonTerminal("quotient index must be at least 2, got " + std::to_string(r));
  for (auto& w : raw) w = mod_pos(w, r);
  std::optional<int> found;
  for (int u = 1; u < r; ++u) {
    if (std::gcd(u, r) != 1) continue;
    const auto a = detail::canonical_under_unit(r, raw, u);
    if (!a) continue;
    // Every admissible unit must agree; this is the uniqueness of the form.
    if (found && *found != *a)
      throw AmbiguousType("units disagree on canonical form of 1/" + std::to_string(r));
    found = a;
  }
  if (!found) {
    throw NonTerminal("1/" + std::to_string(r) + "(" + std::to_string(raw[0]) + "," +
                      std::to_string(raw[1]) + "," + std::to_string(raw[2]) + ") is not terminal");
  }
  return QuotientSingularity{r, *found};
}

}  // namespace fano95
