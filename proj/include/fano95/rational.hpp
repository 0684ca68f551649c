#pragma once

// Exact rational numbers over arbitrary-precision integers.
//
// Values are kept in lowest terms with a positive denominator, so equality
// is structural. The text form is "num/den", with "/den" omitted when the
// denominator is 1.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fano95 {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
  Rational(std::int64_t n, std::int64_t d) : Rational(BigInt(n), BigInt(d)) {}

  /// Parses "n" or "n/d" (optional leading sign on the numerator, no spaces).
  static Rational parse(std::string_view text) {
    auto digits_ok = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    auto to_big = [](std::string_view s) {
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      return BigInt(std::string(s));
    };
    const auto slash = text.find('/');
    const auto head = text.substr(0, slash);
    if (!digits_ok(head, true))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(to_big(head), BigInt(1));
    const auto tail = text.substr(slash + 1);
    if (!digits_ok(tail, false))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return Rational(to_big(head), to_big(tail));
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    a.num_ = -a.num_;
    return a;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  void reduce() {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace fano95
