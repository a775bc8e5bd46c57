#include "coarse/cost.hpp"

#include "coarse/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace coarse {

Cost Cost::approximate(double v) {
  Cost c;
  c.exact_ = false;
  c.d_ = v;
  return c;
}

double Cost::value() const {
  return exact_ ? static_cast<double>(q_) : d_;
}

std::string Cost::str() const {
  if (exact_) {
    std::ostringstream os;
    os << q_;
    return os.str();
  }
  std::ostringstream os;
  os << std::setprecision(12) << d_;
  return os.str();
}

namespace {

template <class ExactOp, class ApproxOp>
Cost combine(const Cost& a, const Cost& b, ExactOp exact, ApproxOp approx) {
  if (a.exact() && b.exact()) return Cost(exact(a.rational(), b.rational()));
  return Cost::approximate(approx(a.value(), b.value()));
}

}  // namespace

Cost operator+(const Cost& a, const Cost& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); },
                 [](double x, double y) { return x + y; });
}

Cost operator-(const Cost& a, const Cost& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); },
                 [](double x, double y) { return x - y; });
}

Cost operator*(const Cost& a, const Cost& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); },
                 [](double x, double y) { return x * y; });
}

Cost operator/(const Cost& a, const Cost& b) {
  if (b.exact() ? b.rational() == 0 : b.value() == 0.0) {
    throw InputError("division by zero in cost arithmetic");
  }
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x / y); },
                 [](double x, double y) { return x / y; });
}

std::strong_ordering compare(const Cost& a, const Cost& b) {
  if (a.exact() && b.exact()) {
    if (a.rational() < b.rational()) return std::strong_ordering::less;
    if (a.rational() > b.rational()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  const double diff = a.value() - b.value();
  if (std::abs(diff) <= kCostTolerance) return std::strong_ordering::equal;
  return diff < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Rational parseRational(const std::string& text) {
  auto fail = [&] { return InputError("not a rational number: '" + text + "'"); };
  if (text.empty()) throw fail();
  const auto slash = text.find('/');
  auto parseInt = [&](const std::string& s) {
    if (s.empty()) throw fail();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw fail();
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw fail();
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash != std::string::npos) {
    BigInt num = parseInt(text.substr(0, slash));
    BigInt den = parseInt(text.substr(slash + 1));
    if (den == 0) throw fail();
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parseInt(text));
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  if (frac.empty()) throw fail();
  for (char ch : frac) {
    if (ch < '0' || ch > '9') throw fail();
  }
  const bool negative = !whole.empty() && whole[0] == '-';
  if (whole.empty() || whole == "-" || whole == "+") whole += "0";
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  BigInt magnitude = abs(parseInt(whole)) * scale + BigInt(frac);
  return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
}

unsigned ceilLog2(unsigned long long x) {
  unsigned m = 0;
  unsigned long long p = 1;
  while (p < x) {
    p <<= 1;
    ++m;
  }
  return m;
}

}  // namespace coarse
