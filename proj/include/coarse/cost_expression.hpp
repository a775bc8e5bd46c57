#pragma once

#include "coarse/cost.hpp"

#include <cstddef>
#include <memory>
#include <string>

namespace coarse {

/// Parsed cost formula over the variable e.
///
/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := power (('*' | '/') power)*
///   power   := unary ('^' power)?
///   unary   := '-' unary | primary
///   primary := number | 'e' | func '(' expr ')' | '(' expr ')'
///   func    := log2 | ceillog2 | ceil | floor | sqrt
///
/// Results stay exact while every step is rational: integer exponents, log2
/// of a power of two, ceil/floor, ceillog2. Anything else falls back to double.
class CostExpression {
 public:
  struct Node;

  static CostExpression parse(const std::string& text);
  Cost evaluate(std::size_t e) const;
  const std::string& text() const { return text_; }

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace coarse
