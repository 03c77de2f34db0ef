#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "fixmet/errors.hpp"

namespace fixmet {

namespace detail {

using int128 = __int128;

constexpr int128 abs128(int128 v) { return v < 0 ? -v : v; }

constexpr int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/// Exact rational number with checked 64-bit storage.
///
/// Values are kept in lowest terms with a positive denominator, so equality
/// is bitwise and comparisons never round. Intermediate arithmetic runs in
/// 128 bits; a result whose reduced numerator or denominator does not fit
/// in 64 bits throws OverflowError.
class Rational {
public:
  constexpr Rational() = default;

  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design

  Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
      throw std::domain_error("rational with zero denominator");
    }
    *this = reduce(numerator, denominator);
  }

  /// Parses "p", "p/q" or a decimal literal such as "2.1" (exactly 21/10).
  /// Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_negative() const noexcept { return num_ < 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  /// Largest integer <= value.
  std::int64_t floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  /// Smallest integer >= value.
  std::int64_t ceil() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  /// Canonical text form: "p/q", or bare "p" when the value is an integer.
  std::string str() const {
    std::string out = std::to_string(num_);
    if (den_ != 1) {
      out += '/';
      out += std::to_string(den_);
    }
    return out;
  }

  /// Exact decimal form ("1.9", "0.25") when the denominator is 2^a * 5^b,
  /// nothing otherwise. Used to name sampled points on the real line.
  std::optional<std::string> decimal_str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    detail::int128 n = i128(a.num_) * a_den(b) + i128(b.num_) * a_den(a);
    return reduce128(n, i128(a.den_) * b.den_);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    detail::int128 n = i128(a.num_) * a_den(b) - i128(b.num_) * a_den(a);
    return reduce128(n, i128(a.den_) * b.den_);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return reduce128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) {
      throw std::domain_error("rational division by zero");
    }
    return reduce128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    detail::int128 lhs = i128(a.num_) * b.den_;
    detail::int128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  static detail::int128 i128(std::int64_t v) { return detail::int128(v); }
  static detail::int128 a_den(const Rational& r) { return detail::int128(r.den_); }

  static Rational reduce(std::int64_t n, std::int64_t d) {
    return reduce128(detail::int128(n), detail::int128(d));
  }

  static Rational reduce128(detail::int128 n, detail::int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      Rational r;
      return r;
    }
    detail::int128 g = detail::gcd128(n, d);
    n /= g;
    d /= g;
    constexpr detail::int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr detail::int128 hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi) {
      throw OverflowError("rational value exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num_{0};
  std::int64_t den_{1};
};

inline Rational Rational::parse(std::string_view text) {
  const auto fail = [&] {
    throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  };

  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = (text[pos] == '-');
    ++pos;
  }

  const auto read_digits = [&](std::int64_t& out) -> std::size_t {
    std::size_t count = 0;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      int digit = text[pos] - '0';
      if (out > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        throw OverflowError("rational literal exceeds 64-bit range");
      }
      out = out * 10 + digit;
      ++pos;
      ++count;
    }
    return count;
  };

  std::int64_t integral = 0;
  if (read_digits(integral) == 0) fail();

  std::int64_t num = integral;
  std::int64_t den = 1;

  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (read_digits(den) == 0 || den == 0) fail();
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::int64_t frac = 0;
    std::size_t digits = read_digits(frac);
    if (digits == 0) fail();
    for (std::size_t i = 0; i < digits; ++i) {
      if (num > std::numeric_limits<std::int64_t>::max() / 10 ||
          den > std::numeric_limits<std::int64_t>::max() / 10) {
        throw OverflowError("rational literal exceeds 64-bit range");
      }
      num *= 10;
      den *= 10;
    }
    if (num > std::numeric_limits<std::int64_t>::max() - frac) {
      throw OverflowError("rational literal exceeds 64-bit range");
    }
    num += frac;
  }

  if (pos != text.size()) fail();
  if (negative) num = -num;
  return Rational(num, den);
}

inline std::optional<std::string> Rational::decimal_str() const {
  std::int64_t d = den_;
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
  if (d != 1) return std::nullopt;

  int k = twos > fives ? twos : fives;
  detail::int128 scaled = detail::int128(num_);
  for (int i = 0; i < k; ++i) scaled *= 10;
  scaled /= den_;

  bool neg = scaled < 0;
  detail::int128 mag = detail::abs128(scaled);
  std::string digits;
  if (mag == 0) digits = "0";
  while (mag > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + int(mag % 10)));
    mag /= 10;
  }
  while (static_cast<int>(digits.size()) <= k) digits.insert(digits.begin(), '0');

  std::string out;
  if (neg) out += '-';
  out += digits.substr(0, digits.size() - k);
  if (k > 0) {
    out += '.';
    out += digits.substr(digits.size() - k);
  }
  return out;
}

}  // namespace fixmet
