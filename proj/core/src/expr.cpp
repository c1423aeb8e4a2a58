#include "choquet/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "choquet/errors.hpp"

namespace choquet::expr {

namespace {

struct FuncInfo {
  std::string_view name;
  Func func;
  int arity;
};

constexpr std::array<FuncInfo, 8> kFunctions{{
    {"abs", Func::kAbs, 1},
    {"sqrt", Func::kSqrt, 1},
    {"exp", Func::kExp, 1},
    {"log", Func::kLog, 1},
    {"sin", Func::kSin, 1},
    {"cos", Func::kCos, 1},
    {"min", Func::kMin, 2},
    {"max", Func::kMax, 2},
}};

const FuncInfo* LookupFunc(std::string_view name) {
  for (const auto& info : kFunctions) {
    if (info.name == name) return &info;
  }
  return nullptr;
}

int Arity(Func f) {
  for (const auto& info : kFunctions) {
    if (info.func == f) return info.arity;
  }
  return 1;
}

NodePtr MakeNode(Node::Kind kind, std::size_t offset,
                 std::vector<NodePtr> args = {}) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->offset = offset;
  node->args = std::move(args);
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr ParseAll() {
    NodePtr root = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) throw ParseError(pos_, "operator or end of input");
    return root;
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr ParseExpr() {
    NodePtr lhs = ParseTerm();
    for (;;) {
      SkipSpace();
      std::size_t at = pos_;
      if (Accept('+')) {
        lhs = MakeNode(Node::Kind::kAdd, at, {lhs, ParseTerm()});
      } else if (Accept('-')) {
        lhs = MakeNode(Node::Kind::kSub, at, {lhs, ParseTerm()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr ParseTerm() {
    NodePtr lhs = ParseFactor();
    for (;;) {
      SkipSpace();
      std::size_t at = pos_;
      if (Accept('*')) {
        lhs = MakeNode(Node::Kind::kMul, at, {lhs, ParseFactor()});
      } else if (Accept('/')) {
        lhs = MakeNode(Node::Kind::kDiv, at, {lhs, ParseFactor()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr ParseFactor() {
    NodePtr base = ParseUnary();
    SkipSpace();
    std::size_t at = pos_;
    if (Accept('^')) return MakeNode(Node::Kind::kPow, at, {base, ParseFactor()});
    return base;
  }

  NodePtr ParseUnary() {
    SkipSpace();
    std::size_t at = pos_;
    if (Accept('-')) return MakeNode(Node::Kind::kNeg, at, {ParseUnary()});
    return ParsePrimary();
  }

  NodePtr ParsePrimary() {
    SkipSpace();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) {
      throw ParseError(pos_, "number, 't', function call or '('");
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return ParseNumber();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ParseIdent();
    if (Accept('(')) {
      NodePtr inner = ParseExpr();
      SkipSpace();
      if (!Accept(')')) throw ParseError(pos_, "')'");
      return inner;
    }
    throw ParseError(at, "number, 't', function call or '('");
  }

  NodePtr ParseNumber() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw ParseError(start, "digit");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw ParseError(pos_, "exponent digits");
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_ || !std::isfinite(value)) {
      throw ParseError(start, "finite number");
    }
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::kNumber;
    node->number = value;
    node->offset = start;
    return node;
  }

  NodePtr ParseIdent() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    const FuncInfo* info = LookupFunc(name);
    if (info == nullptr) {
      if (name == "t") return MakeNode(Node::Kind::kVariable, start);
      throw ParseError(start, "'t' or one of abs, sqrt, exp, log, sin, cos, min, max");
    }
    SkipSpace();
    if (!Accept('(')) throw ParseError(pos_, "'(' after function name");
    std::vector<NodePtr> args{ParseExpr()};
    SkipSpace();
    if (info->arity == 2) {
      if (!Accept(',')) throw ParseError(pos_, "','");
      args.push_back(ParseExpr());
      SkipSpace();
    }
    if (!Accept(')')) throw ParseError(pos_, "')'");
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::kCall;
    node->func = info->func;
    node->offset = start;
    node->args = std::move(args);
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double Check(double value, const Node& node, double t, const char* what) {
  if (!std::isfinite(value)) throw EvalError(what, Print(node), t);
  return value;
}

double EvalNode(const Node& node, double t) {
  auto arg = [&](std::size_t i) { return EvalNode(*node.args[i], t); };
  switch (node.kind) {
    case Node::Kind::kNumber:
      return node.number;
    case Node::Kind::kVariable:
      return t;
    case Node::Kind::kNeg:
      return -arg(0);
    case Node::Kind::kAdd:
      return Check(arg(0) + arg(1), node, t, "non-finite result");
    case Node::Kind::kSub:
      return Check(arg(0) - arg(1), node, t, "non-finite result");
    case Node::Kind::kMul:
      return Check(arg(0) * arg(1), node, t, "non-finite result");
    case Node::Kind::kDiv: {
      double num = arg(0);
      double den = arg(1);
      if (den == 0.0) throw EvalError("division by zero", Print(node), t);
      return Check(num / den, node, t, "non-finite result");
    }
    case Node::Kind::kPow:
      return Check(std::pow(arg(0), arg(1)), node, t, "invalid power");
    case Node::Kind::kCall: {
      double x = arg(0);
      switch (node.func) {
        case Func::kAbs:
          return std::abs(x);
        case Func::kSqrt:
          if (x < 0.0) throw EvalError("sqrt of negative argument", Print(node), t);
          return std::sqrt(x);
        case Func::kExp:
          return Check(std::exp(x), node, t, "exp overflow");
        case Func::kLog:
          if (x <= 0.0) throw EvalError("log of nonpositive argument", Print(node), t);
          return std::log(x);
        case Func::kSin:
          return std::sin(x);
        case Func::kCos:
          return std::cos(x);
        case Func::kMin:
          return std::min(x, arg(1));
        case Func::kMax:
          return std::max(x, arg(1));
      }
    }
  }
  return 0.0;
}

std::string Describe(const std::string& message, const std::string& node, double t) {
  std::ostringstream os;
  os << message << " in '" << node << "' at t=" << t;
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::string expected)
    : std::runtime_error("parse error at offset " + std::to_string(offset) +
                         ": expected " + expected),
      offset_(offset),
      expected_(std::move(expected)) {}

EvalError::EvalError(const std::string& message, std::string node, double t)
    : std::runtime_error(Describe(message, node, t)), node_(std::move(node)), t_(t) {}

Expr Expr::Parse(std::string_view text) {
  Parser parser(text);
  return Expr(parser.ParseAll(), std::string(text));
}

double Expr::Eval(double t) const { return EvalNode(*root_, t); }

std::string Expr::Print() const { return expr::Print(*root_); }

RealFunction Expr::AsFunction() const {
  NodePtr root = root_;
  return [root](double t) { return EvalNode(*root, t); };
}

SampledFunction Expr::Sample(double a, double b, std::size_t cells) const {
  return SampledFunction::FromFunction(AsFunction(), a, b, cells);
}

std::string_view FuncName(Func f) {
  for (const auto& info : kFunctions) {
    if (info.func == f) return info.name;
  }
  return "?";
}

std::string Print(const Node& node) {
  auto binary = [&](const char* op) {
    return "(" + Print(*node.args[0]) + " " + op + " " + Print(*node.args[1]) + ")";
  };
  switch (node.kind) {
    case Node::Kind::kNumber:
      return FormatNumber(node.number);
    case Node::Kind::kVariable:
      return "t";
    case Node::Kind::kNeg:
      return "(-" + Print(*node.args[0]) + ")";
    case Node::Kind::kAdd:
      return binary("+");
    case Node::Kind::kSub:
      return binary("-");
    case Node::Kind::kMul:
      return binary("*");
    case Node::Kind::kDiv:
      return binary("/");
    case Node::Kind::kPow:
      return binary("^");
    case Node::Kind::kCall: {
      std::string out(FuncName(node.func));
      out += "(" + Print(*node.args[0]);
      if (Arity(node.func) == 2) out += ", " + Print(*node.args[1]);
      return out + ")";
    }
  }
  return "?";
}

bool StructurallyEqual(const Node& lhs, const Node& rhs) {
  if (lhs.kind != rhs.kind || lhs.args.size() != rhs.args.size()) return false;
  if (lhs.kind == Node::Kind::kNumber && lhs.number != rhs.number) return false;
  if (lhs.kind == Node::Kind::kCall && lhs.func != rhs.func) return false;
  for (std::size_t i = 0; i < lhs.args.size(); ++i) {
    if (!StructurallyEqual(*lhs.args[i], *rhs.args[i])) return false;
  }
  return true;
}

}  // namespace choquet::expr
