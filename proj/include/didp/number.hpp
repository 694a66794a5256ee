#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "didp/errors.hpp"

namespace didp {

// Numeric value of a model: an exact rational (integer cost type) or a
// double (continuous cost type). Integer models stay in the rational lane
// throughout; `/` yields an exact fractional intermediate and ceil/floor
// land back on integers, so weight tables holding 1/2 or 1/3 lose nothing.
class Number {
 public:
  constexpr Number() = default;
  constexpr Number(int v) : num_(v) {}
  constexpr Number(std::int64_t v) : num_(v) {}

  static Number rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw EvalError("rational with zero denominator");
    Number n;
    n.num_ = num;
    n.den_ = den;
    n.normalize();
    return n;
  }

  static Number real(double v) {
    Number n;
    n.rational_ = false;
    n.real_ = v;
    return n;
  }

  bool is_rational() const { return rational_; }
  bool is_real() const { return !rational_; }
  bool is_integer() const { return rational_ && den_ == 1; }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  std::int64_t as_int64() const {
    if (!is_integer()) throw EvalError("number " + str() + " is not an integer");
    return num_;
  }

  double as_double() const {
    if (rational_) return static_cast<double>(num_) / static_cast<double>(den_);
    return real_;
  }

  friend Number operator+(const Number& a, const Number& b) {
    if (a.rational_ && b.rational_) {
      __int128 num = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
      return make_checked(num, i128(a.den_) * b.den_);
    }
    return real(a.as_double() + b.as_double());
  }

  friend Number operator-(const Number& a, const Number& b) {
    if (a.rational_ && b.rational_) {
      __int128 num = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
      return make_checked(num, i128(a.den_) * b.den_);
    }
    return real(a.as_double() - b.as_double());
  }

  friend Number operator*(const Number& a, const Number& b) {
    if (a.rational_ && b.rational_) {
      return make_checked(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    return real(a.as_double() * b.as_double());
  }

  friend Number operator/(const Number& a, const Number& b) {
    if (b.is_zero()) throw EvalError("division by zero");
    if (a.rational_ && b.rational_) {
      return make_checked(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    return real(a.as_double() / b.as_double());
  }

  Number ceil() const {
    if (rational_) {
      std::int64_t q = num_ / den_;
      if (num_ % den_ > 0) ++q;
      return Number(q);
    }
    return from_real_integral(std::ceil(real_));
  }

  Number floor() const {
    if (rational_) {
      std::int64_t q = num_ / den_;
      if (num_ % den_ < 0) --q;
      return Number(q);
    }
    return from_real_integral(std::floor(real_));
  }

  static Number min(const Number& a, const Number& b) { return b < a ? b : a; }
  static Number max(const Number& a, const Number& b) { return a < b ? b : a; }

  bool is_zero() const { return rational_ ? num_ == 0 : real_ == 0.0; }
  bool is_negative() const { return rational_ ? num_ < 0 : real_ < 0.0; }

  // Exact three-way comparison for rational pairs; mixed comparisons go
  // through double.
  friend int compare(const Number& a, const Number& b) {
    if (a.rational_ && b.rational_) {
      __int128 lhs = i128(a.num_) * b.den_;
      __int128 rhs = i128(b.num_) * a.den_;
      return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
    }
    double x = a.as_double(), y = b.as_double();
    return x < y ? -1 : x > y ? 1 : 0;
  }

  friend bool operator==(const Number& a, const Number& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Number& a, const Number& b) { return compare(a, b) != 0; }
  friend bool operator<(const Number& a, const Number& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Number& a, const Number& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Number& a, const Number& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Number& a, const Number& b) { return compare(a, b) >= 0; }

  std::string str() const {
    if (rational_) {
      if (den_ == 1) return std::to_string(num_);
      return std::to_string(num_) + "/" + std::to_string(den_);
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", real_);
    return buf;
  }

  // Stable 128-bit key for hashing and signature packing. Rationals pack as
  // (num, den); reals as (bits, 0) -- den is never 0 for a rational.
  std::pair<std::uint64_t, std::uint64_t> key() const {
    if (rational_) {
      return {static_cast<std::uint64_t>(num_), static_cast<std::uint64_t>(den_)};
    }
    double v = real_ == 0.0 ? 0.0 : real_;  // collapse -0.0
    return {std::bit_cast<std::uint64_t>(v), 0};
  }

  std::size_t hash() const {
    auto [a, b] = key();
    std::size_t h = std::hash<std::uint64_t>{}(a);
    return h ^ (std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  }

 private:
  static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  // Builds num/den from 128-bit intermediates, falling back to double on
  // overflow (never reached at the instance sizes this project targets).
  static Number make_checked(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) {
      return real(static_cast<double>(num) / static_cast<double>(den));
    }
    Number n;
    n.num_ = static_cast<std::int64_t>(num);
    n.den_ = static_cast<std::int64_t>(den);
    return n;
  }

  static Number from_real_integral(double v) {
    if (std::abs(v) < 9.0e18) return Number(static_cast<std::int64_t>(v));
    return real(v);
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    __int128 g = gcd128(num_, den_);
    if (g > 1) {
      num_ = static_cast<std::int64_t>(num_ / g);
      den_ = static_cast<std::int64_t>(den_ / g);
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double real_ = 0.0;
  bool rational_ = true;
};

}  // namespace didp
