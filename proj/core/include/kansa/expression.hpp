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

#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace kansa {

/// Bindings for the free variables of an expression.
struct Variables {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
};

/// Parsed arithmetic expression over x, y, t.
///
/// Grammar (loosest to tightest): `+ -`, then `* /`, then unary `-`/`+`,
/// then right-associative `^`. Primaries are numbers, the variables x y t,
/// the constants pi and e, parenthesized expressions and the calls
/// sin cos exp log sqrt abs. So `-2^2` is -4 and `2^3^2` is 512.
class Expression {
 public:
  struct Node;

  /// Throws ExpressionError carrying the byte offset of the failure.
  static Expression parse(std::string_view text);

  /// Throws ExpressionError for log/sqrt outside their domain.
  double evaluate(const Variables& vars) const;
  double operator()(double x, double y, double t = 0.0) const { return evaluate({x, y, t}); }

  /// Fully parenthesized form; parsing it yields an equal tree.
  std::string to_string() const;
  const std::string& source() const { return source_; }

  bool uses_x() const;
  bool uses_y() const;
  bool uses_t() const;

 private:
  Expression(std::shared_ptr<const Node> root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}

  std::shared_ptr<const Node> root_;
  std::string source_;
};

}  // namespace kansa
