#include "coarse/cost_expression.hpp"

#include "coarse/errors.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

namespace coarse {

struct CostExpression::Node {
  enum class Op { number, variable, negate, add, subtract, multiply, divide, power, function };

  Op op = Op::number;
  Rational value;
  std::string function;
  std::vector<std::shared_ptr<const Node>> children;
};

namespace {

using NodePtr = std::shared_ptr<const CostExpression::Node>;
using Op = CostExpression::Node::Op;

bool isInteger(const Rational& q) { return denominator(q) == 1; }

BigInt floorDiv(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) q -= 1;
  return q;
}

Cost exactFloor(const Cost& x) {
  if (!x.exact()) return Cost::approximate(std::floor(x.value()));
  return Cost(Rational(floorDiv(numerator(x.rational()), denominator(x.rational()))));
}

Cost exactCeil(const Cost& x) {
  if (!x.exact()) return Cost::approximate(std::ceil(x.value()));
  const BigInt f = floorDiv(numerator(x.rational()), denominator(x.rational()));
  return Cost(Rational(isInteger(x.rational()) ? f : BigInt(f + 1)));
}

// Exponent k with 2^k == q, if q is a power of two (k may be negative).
std::optional<long> exactLog2(const Rational& q) {
  if (q <= 0) return std::nullopt;
  auto powerOfTwo = [](BigInt v) -> std::optional<long> {
    long k = 0;
    while (v > 1) {
      if (v % 2 != 0) return std::nullopt;
      v /= 2;
      ++k;
    }
    return k;
  };
  if (numerator(q) == 1) {
    auto k = powerOfTwo(denominator(q));
    if (k) return -*k;
    return std::nullopt;
  }
  if (denominator(q) == 1) return powerOfTwo(numerator(q));
  return std::nullopt;
}

void requirePositive(const Cost& x, const char* fn) {
  if (x.value() <= 0.0 && !(x.exact() && x.rational() > 0)) {
    throw InputError(std::string(fn) + " of a nonpositive value");
  }
}

Cost applyFunction(const std::string& fn, const Cost& x) {
  if (fn == "ceil") return exactCeil(x);
  if (fn == "floor") return exactFloor(x);
  if (fn == "log2") {
    requirePositive(x, "log2");
    if (x.exact()) {
      if (auto k = exactLog2(x.rational())) return Cost(Rational(*k));
    }
    return Cost::approximate(std::log2(x.value()));
  }
  if (fn == "ceillog2") {
    requirePositive(x, "ceillog2");
    if (!x.exact()) return Cost::approximate(std::ceil(std::log2(x.value())));
    long m = 0;
    Rational p = 1;
    while (p < x.rational()) {
      p *= 2;
      ++m;
    }
    while (p / 2 >= x.rational()) {
      p /= 2;
      --m;
    }
    return Cost(Rational(m));
  }
  if (fn == "sqrt") {
    if (x.value() < 0.0) throw InputError("sqrt of a negative value");
    if (x.exact()) {
      const BigInt n = numerator(x.rational());
      const BigInt d = denominator(x.rational());
      const BigInt rn = sqrt(n);
      const BigInt rd = sqrt(d);
      if (rn * rn == n && rd * rd == d) return Cost(Rational(rn, rd));
    }
    return Cost::approximate(std::sqrt(x.value()));
  }
  throw InputError("unknown function '" + fn + "'");
}

Cost raise(const Cost& base, const Cost& exponent) {
  if (base.exact() && exponent.exact() && isInteger(exponent.rational()) &&
      abs(exponent.rational()) <= 4096) {
    const long k = static_cast<long>(numerator(exponent.rational()));
    if (k < 0 && base.rational() == 0) throw InputError("zero raised to a negative power");
    Rational r = 1;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) r *= base.rational();
    return Cost(k < 0 ? Rational(1 / r) : r);
  }
  const double v = std::pow(base.value(), exponent.value());
  if (!std::isfinite(v)) throw InputError("cost expression produced a non-finite value");
  return Cost::approximate(v);
}

Cost evaluateNode(const CostExpression::Node& node, const Cost& e) {
  switch (node.op) {
    case Op::number:
      return Cost(node.value);
    case Op::variable:
      return e;
    case Op::negate:
      return Cost(0LL) - evaluateNode(*node.children[0], e);
    case Op::add:
      return evaluateNode(*node.children[0], e) + evaluateNode(*node.children[1], e);
    case Op::subtract:
      return evaluateNode(*node.children[0], e) - evaluateNode(*node.children[1], e);
    case Op::multiply:
      return evaluateNode(*node.children[0], e) * evaluateNode(*node.children[1], e);
    case Op::divide:
      return evaluateNode(*node.children[0], e) / evaluateNode(*node.children[1], e);
    case Op::power:
      return raise(evaluateNode(*node.children[0], e), evaluateNode(*node.children[1], e));
    case Op::function:
      return applyFunction(node.function, evaluateNode(*node.children[0], e));
  }
  throw InputError("corrupt cost expression");
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  NodePtr parseAll() {
    NodePtr n = expr();
    skipSpace();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cost expression '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr make(Op op, std::vector<NodePtr> children = {}, Rational value = 0,
                      std::string fn = {}) {
    auto n = std::make_shared<CostExpression::Node>();
    n->op = op;
    n->children = std::move(children);
    n->value = std::move(value);
    n->function = std::move(fn);
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Op::add, {lhs, term()});
      } else if (accept('-')) {
        lhs = make(Op::subtract, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = power();
    for (;;) {
      if (accept('*')) {
        lhs = make(Op::multiply, {lhs, power()});
      } else if (accept('/')) {
        lhs = make(Op::divide, {lhs, power()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr power() {
    NodePtr base = unary();
    if (accept('^')) return make(Op::power, {base, power()});
    return base;
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::negate, {unary()});
    return primary();
  }

  NodePtr primary() {
    skipSpace();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (accept('(')) {
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
        ++pos_;
      }
      return make(Op::number, {}, parseRational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string word = s_.substr(start, pos_ - start);
      if (word == "e") return make(Op::variable);
      if (word != "log2" && word != "ceillog2" && word != "ceil" && word != "floor" &&
          word != "sqrt") {
        pos_ = start;
        fail("unknown identifier '" + word + "'");
      }
      if (!accept('(')) fail("expected '(' after " + word);
      NodePtr arg = expr();
      if (!accept(')')) fail("expected ')'");
      return make(Op::function, {arg}, 0, word);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

CostExpression CostExpression::parse(const std::string& text) {
  CostExpression ex;
  ex.text_ = text;
  ex.root_ = Parser(ex.text_).parseAll();
  return ex;
}

Cost CostExpression::evaluate(std::size_t e) const {
  return evaluateNode(*root_, Cost(static_cast<long long>(e)));
}

}  // namespace coarse
