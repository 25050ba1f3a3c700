#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vmemb {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Invariants: den > 0 and gcd(|num|, den) == 1. All intermediate products
/// are taken in 128 bits; a result whose reduced form does not fit in 64
/// bits throws std::overflow_error. Comparisons never overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  /// Accepts "12", "12.5", ".5" and the exact fraction form "25/3".
  static Rational parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  /// Canonical text form: exact decimal when the denominator is 2^a*5^b
  /// (no trailing zeros), otherwise "num/den".
  std::string str() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return make(-static_cast<__int128>(a.num_), a.den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static Rational make(__int128 num, __int128 den);

  long long num_ = 0;
  long long den_ = 1;
};

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

/// Congestion value: a finite non-negative rational or the distinguished
/// INFEASIBLE value, which compares greater than every finite value.
class Congestion {
 public:
  Congestion() = default;
  Congestion(Rational value) : value_(value) {}  // NOLINT: implicit by design
  static Congestion infeasible() {
    Congestion c;
    c.infeasible_ = true;
    return c;
  }

  bool is_infeasible() const { return infeasible_; }
  const Rational& value() const {
    if (infeasible_) throw std::logic_error("congestion is infeasible");
    return value_;
  }

  std::string str() const { return infeasible_ ? "infeasible" : value_.str(); }

  friend bool operator==(const Congestion& a, const Congestion& b) {
    if (a.infeasible_ || b.infeasible_) return a.infeasible_ == b.infeasible_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const Congestion& a, const Congestion& b) {
    if (a.infeasible_) return false;
    if (b.infeasible_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Congestion& a, const Congestion& b) { return !(b < a); }
  friend bool operator>(const Congestion& a, const Congestion& b) { return b < a; }
  friend bool operator>=(const Congestion& a, const Congestion& b) { return !(a < b); }

 private:
  Rational value_;
  bool infeasible_ = false;
};

inline const Congestion& max(const Congestion& a, const Congestion& b) { return a < b ? b : a; }

}  // namespace vmemb
