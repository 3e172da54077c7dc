#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nscloner {

/// Exact rational number on 64-bit numerator/denominator.
///
/// All intermediates go through 128-bit integers and the result is checked
/// against the 64-bit range, so arithmetic either returns the exact value or
/// throws std::overflow_error. The denominator is kept positive and the
/// fraction fully reduced, which makes operator== exact equality.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long value) : num_(value) {}
  Rational(long long num, long long den) { assign(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  bool is_zero() const { return num_ == 0; }

  /// "7/12" for proper fractions, "3" when the denominator is 1.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using i128 = __int128;

  void assign(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    num_ = g ? num / g : 0;
    den_ = g ? den / g : 1;
  }

  static Rational from_i128(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    if (a) {
      num /= a;
      den /= a;
    }
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (num < lo || num > hi || den > hi) throw std::overflow_error("Rational: 64-bit overflow");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
/// Throws std::overflow_error once the value leaves the 64-bit range
/// (first happens near n = 63 at the central coefficient).
inline long long binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<long long>::max())
      throw std::overflow_error("binomial: 64-bit overflow");
  }
  return static_cast<long long>(result);
}

}  // namespace nscloner
