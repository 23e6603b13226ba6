// Copyright 2026 The ccgeom Authors.
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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccgeom {

/// Polynomial expression over named variables: numbers, variables, + - *,
/// unary minus, parentheses and non-negative integer powers (x^2).
/// Compiled once to a stack program.
class Expression {
 public:
  /// Throws std::invalid_argument with the offending position on bad input.
  static Expression parse(std::string_view text, const std::vector<std::string>& variables);

  /// `values` lists the variables in the order given to parse().
  double evaluate(std::span<const double> values) const;

  const std::string& text() const { return text_; }

 private:
  enum class Op { constant, variable, add, sub, mul, neg, pow };
  struct Instruction {
    Op op;
    double value = 0.0;
    int index = 0;
  };
  friend class ExpressionParser;

  std::string text_;
  std::vector<Instruction> program_;
  std::size_t max_stack_ = 0;
};

}  // namespace ccgeom
