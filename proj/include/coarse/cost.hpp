#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace coarse {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Absolute tolerance used whenever at least one operand is inexact.
inline constexpr double kCostTolerance = 1e-9;

/// A nonnegative cost value. Exact rational where the cost model allows it,
/// otherwise a double. Arithmetic between two exact values stays exact.
class Cost {
 public:
  Cost() = default;
  Cost(long long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Cost(Rational q) : q_(std::move(q)) {}  // NOLINT(google-explicit-constructor)

  static Cost approximate(double v);

  bool exact() const { return exact_; }
  const Rational& rational() const { return q_; }
  double value() const;

  /// Exact rendering ("13", "13/2") or a decimal for inexact values.
  std::string str() const;

  friend Cost operator+(const Cost& a, const Cost& b);
  friend Cost operator-(const Cost& a, const Cost& b);
  friend Cost operator*(const Cost& a, const Cost& b);
  friend Cost operator/(const Cost& a, const Cost& b);
  Cost& operator+=(const Cost& o) { return *this = *this + o; }

  /// Three-way comparison; inexact operands within kCostTolerance compare equal.
  friend std::strong_ordering compare(const Cost& a, const Cost& b);
  friend bool operator==(const Cost& a, const Cost& b) { return compare(a, b) == 0; }
  friend bool operator<(const Cost& a, const Cost& b) { return compare(a, b) < 0; }
  friend bool operator>(const Cost& a, const Cost& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Cost& a, const Cost& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Cost& a, const Cost& b) { return compare(a, b) >= 0; }

 private:
  bool exact_ = true;
  Rational q_{0};
  double d_ = 0.0;
};

/// Parses "3", "-2", "13/2" or a finite decimal like "0.25" into an exact rational.
Rational parseRational(const std::string& text);

/// Smallest m with 2^m >= x, for x >= 1.
unsigned ceilLog2(unsigned long long x);

}  // namespace coarse
