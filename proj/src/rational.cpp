#include "vmemb/rational.hpp"

#include <cctype>
#include <limits>

namespace vmemb {
namespace {

using i128 = __int128;

constexpr i128 kMaxI64 = std::numeric_limits<long long>::max();
constexpr i128 kMinI64 = std::numeric_limits<long long>::min();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
}

long long parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 18) bad_literal(whole);
  long long value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) bad_literal(whole);
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational Rational::make(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMaxI64 || num < kMinI64 || den > kMaxI64) {
    throw std::overflow_error("rational overflow");
  }
  Rational r;
  r.num_ = static_cast<long long>(num);
  r.den_ = static_cast<long long>(den);
  return r;
}

Rational::Rational(long long num, long long den) { *this = make(num, den); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) {
    return Rational::make(static_cast<i128>(a.num_) + b.num_, a.den_);
  }
  return Rational::make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                        static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) {
    return Rational::make(static_cast<i128>(a.num_) - b.num_, a.den_);
  }
  return Rational::make(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                        static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return Rational::make(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_literal(text);

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) bad_literal(text);
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    long long num = parse_digits(s.substr(0, slash), text);
    long long den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) bad_literal(text);
    return make(negative ? -static_cast<i128>(num) : num, den);
  }

  std::string_view whole = s;
  std::string_view frac;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    whole = s.substr(0, dot);
    frac = s.substr(dot + 1);
    if (frac.empty()) bad_literal(text);
  }
  if (whole.empty() && frac.empty()) bad_literal(text);

  i128 num = whole.empty() ? 0 : parse_digits(whole, text);
  i128 den = 1;
  if (!frac.empty()) {
    long long frac_value = parse_digits(frac, text);
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = num * den + frac_value;
  }
  return make(negative ? -num : num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);

  // Exact decimal expansion exists iff den = 2^a * 5^b.
  long long d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

  int digits = twos > fives ? twos : fives;
  i128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  i128 scaled = static_cast<i128>(num_) * (scale / den_);

  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string raw;
  while (scaled > 0) {
    raw.insert(raw.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  while (static_cast<int>(raw.size()) <= digits) raw.insert(raw.begin(), '0');
  raw.insert(raw.end() - digits, '.');
  if (negative) raw.insert(raw.begin(), '-');
  return raw;
}

}  // namespace vmemb
