#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "choquet/sampled_function.hpp"

namespace choquet::expr {

// Grammar (whitespace insensitive):
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := unary ('^' factor)?
//   unary   := '-' unary | primary
//   primary := number | 't' | ident '(' expr (',' expr)? ')' | '(' expr ')'
// Functions: abs sqrt exp log sin cos (one argument), min max (two).

enum class Func { kAbs, kSqrt, kExp, kLog, kSin, kCos, kMin, kMax };

struct Node {
  enum class Kind { kNumber, kVariable, kNeg, kAdd, kSub, kMul, kDiv, kPow, kCall };

  Kind kind = Kind::kNumber;
  double number = 0.0;
  Func func = Func::kAbs;
  std::vector<std::shared_ptr<const Node>> args;
  std::size_t offset = 0;  // byte offset of the node in the source text
};

using NodePtr = std::shared_ptr<const Node>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected);

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& message, std::string node, double t);

  const std::string& node() const noexcept { return node_; }
  double t() const noexcept { return t_; }

 private:
  std::string node_;
  double t_;
};

// An immutable parsed expression in the single variable t.
class Expr {
 public:
  static Expr Parse(std::string_view text);

  double Eval(double t) const;
  // Fully parenthesized text that parses back to a structurally equal tree.
  std::string Print() const;
  const Node& root() const { return *root_; }
  const std::string& source() const { return source_; }

  RealFunction AsFunction() const;

  // Samples at M+1 uniform nodes of [a,b]. Throws EvalError carrying the
  // failing node coordinate.
  SampledFunction Sample(double a, double b, std::size_t cells) const;

 private:
  Expr(NodePtr root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}

  NodePtr root_;
  std::string source_;
};

std::string Print(const Node& node);
bool StructurallyEqual(const Node& lhs, const Node& rhs);
std::string_view FuncName(Func f);

}  // namespace choquet::expr
