#pragma once

// Weight systems (1, a1, a2, a3, a4) of anticanonically embedded hypersurfaces.

#include "fano95/rational.hpp"

#include <array>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fano95 {

class WeightSystem {
 public:
  /// Validates a1 <= a2 <= a3 <= a4, positivity, and that every triple of
  /// the four weights is coprime (which covers well-formedness too).
  explicit WeightSystem(std::array<int, 4> a) : a_(a) {
    for (int w : a_)
      if (w < 1) throw std::invalid_argument("weights must be positive: " + str());
    for (std::size_t i = 0; i + 1 < a_.size(); ++i)
      if (a_[i] > a_[i + 1]) throw std::invalid_argument("weights must be non-decreasing: " + str());
    if (!isolated(a_)) throw std::invalid_argument("weight triple with common factor: " + str());
  }

  /// True iff a is well formed with isolated quotient singularities.
  static bool isolated(const std::array<int, 4>& a) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        for (std::size_t k = j + 1; k < 4; ++k)
          if (std::gcd(std::gcd(a[i], a[j]), a[k]) != 1) return false;
    return true;
  }

  const std::array<int, 4>& a() const { return a_; }
  int degree() const { return a_[0] + a_[1] + a_[2] + a_[3]; }

  /// All five ambient weights, the leading 1 included.
  std::array<int, 5> ambient() const { return {1, a_[0], a_[1], a_[2], a_[3]}; }

  std::string str() const {
    std::string s = "P(1";
    for (int w : a_) s += "," + std::to_string(w);
    return s + ")";
  }

  friend auto operator<=>(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::array<int, 4> a_;
};

/// Anticanonical degree d / (a1 a2 a3 a4).
inline Rational minus_k_cubed(const WeightSystem& w) {
  const auto& a = w.a();
  return Rational(BigInt(w.degree()), BigInt(a[0]) * a[1] * a[2] * a[3]);
}

}  // namespace fano95
