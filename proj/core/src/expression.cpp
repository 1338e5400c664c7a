// Copyright 2026 The kansa-tps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kansa/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "kansa/errors.hpp"

namespace kansa {

struct Expression::Node {
  enum class Kind { kNumber, kVariable, kConstant, kNegate, kBinary, kCall };

  Kind kind;
  double value = 0.0;
  char symbol = 0;   // variable name, or binary operator
  std::string name;  // constant or function name
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

bool is_function(std::string_view name) {
  return name == "sin" || name == "cos" || name == "exp" || name == "log" || name == "sqrt" ||
         name == "abs";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ExpressionError("syntax error at offset " + std::to_string(pos_) + ": " + message, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr binary(char op, NodePtr l, NodePtr r) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::kBinary;
    n->symbol = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = binary('+', lhs, parse_product());
      } else if (accept('-')) {
        lhs = binary('-', lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = binary('*', lhs, parse_unary());
      } else if (accept('/')) {
        lhs = binary('/', lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) {
      auto n = std::make_shared<Expression::Node>();
      n->kind = Kind::kNegate;
      n->lhs = parse_unary();
      return n;
    }
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (accept('^')) return binary('^', base, parse_unary());
    return base;
  }

  NodePtr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    auto digit_at = [&](std::size_t i) {
      return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
    };
    while (digit_at(pos_)) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (digit_at(pos_)) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      if (digit_at(q)) {
        pos_ = q;
        while (digit_at(pos_)) ++pos_;
      }
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || end != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::kNumber;
    n->value = value;
    return n;
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    auto n = std::make_shared<Expression::Node>();
    if (name == "x" || name == "y" || name == "t") {
      n->kind = Kind::kVariable;
      n->symbol = name[0];
    } else if (name == "pi" || name == "e") {
      n->kind = Kind::kConstant;
      n->name = name;
    } else if (is_function(name)) {
      if (!accept('(')) fail("expected '(' after function '" + name + "'");
      n->kind = Kind::kCall;
      n->name = name;
      n->lhs = parse_sum();
      if (!accept(')')) fail("expected ')'");
    } else {
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double eval_node(const Expression::Node& n, const Variables& v) {
  switch (n.kind) {
    case Kind::kNumber:
      return n.value;
    case Kind::kVariable:
      return n.symbol == 'x' ? v.x : n.symbol == 'y' ? v.y : v.t;
    case Kind::kConstant:
      return n.name == "pi" ? std::numbers::pi : std::numbers::e;
    case Kind::kNegate:
      return -eval_node(*n.lhs, v);
    case Kind::kBinary: {
      const double a = eval_node(*n.lhs, v);
      const double b = eval_node(*n.rhs, v);
      switch (n.symbol) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        default: return std::pow(a, b);
      }
    }
    case Kind::kCall: {
      const double a = eval_node(*n.lhs, v);
      if (n.name == "sin") return std::sin(a);
      if (n.name == "cos") return std::cos(a);
      if (n.name == "exp") return std::exp(a);
      if (n.name == "abs") return std::abs(a);
      if (n.name == "log") {
        if (!(a > 0.0)) throw ExpressionError("log of non-positive value " + fmt::format("{}", a), 0);
        return std::log(a);
      }
      if (!(a >= 0.0)) throw ExpressionError("sqrt of negative value " + fmt::format("{}", a), 0);
      return std::sqrt(a);
    }
  }
  return 0.0;
}

std::string print_node(const Expression::Node& n) {
  switch (n.kind) {
    case Kind::kNumber:
      return fmt::format("{}", n.value);
    case Kind::kVariable:
      return std::string(1, n.symbol);
    case Kind::kConstant:
      return n.name;
    case Kind::kNegate:
      return "(-" + print_node(*n.lhs) + ")";
    case Kind::kBinary:
      return "(" + print_node(*n.lhs) + std::string(1, n.symbol) + print_node(*n.rhs) + ")";
    case Kind::kCall:
      return n.name + "(" + print_node(*n.lhs) + ")";
  }
  return {};
}

bool uses_variable(const Expression::Node& n, char var) {
  if (n.kind == Kind::kVariable) return n.symbol == var;
  return (n.lhs && uses_variable(*n.lhs, var)) || (n.rhs && uses_variable(*n.rhs, var));
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Parser parser(text);
  return Expression(parser.parse(), std::string(text));
}

double Expression::evaluate(const Variables& vars) const { return eval_node(*root_, vars); }

std::string Expression::to_string() const { return print_node(*root_); }

bool Expression::uses_x() const { return uses_variable(*root_, 'x'); }
bool Expression::uses_y() const { return uses_variable(*root_, 'y'); }
bool Expression::uses_t() const { return uses_variable(*root_, 't'); }

}  // namespace kansa
