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

#include "ccgeom/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ccgeom {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const std::vector<std::string>& variables, Expression& out)
      : text_(text), variables_(variables), out_(out) {}

  void run() {
    expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
  }

 private:
  using Op = Expression::Op;

  void expr() {
    term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        term();
        emit({Op::add}, -1);
      } else if (accept('-')) {
        term();
        emit({Op::sub}, -1);
      } else {
        return;
      }
    }
  }

  void term() {
    factor();
    for (;;) {
      skip_space();
      if (!accept('*')) return;
      factor();
      emit({Op::mul}, -1);
    }
  }

  void factor() {
    skip_space();
    if (accept('-')) {
      factor();
      emit({Op::neg}, 0);
      return;
    }
    if (accept('+')) {
      factor();
      return;
    }
    primary();
    skip_space();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("power needs a non-negative integer exponent");
      int exponent = 0;
      std::from_chars(text_.data() + start, text_.data() + pos_, exponent);
      emit({Op::pow, 0.0, exponent}, 0);
    }
  }

  void primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      expr();
      skip_space();
      if (!accept(')')) fail("missing ')'");
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
      if (ec != std::errc()) fail("bad number");
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      emit({Op::constant, value}, +1);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i] == name) {
          emit({Op::variable, 0.0, static_cast<int>(i)}, +1);
          return;
        }
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  void emit(Expression::Instruction ins, int stack_change) {
    out_.program_.push_back(ins);
    depth_ += stack_change;
    if (depth_ > static_cast<long>(out_.max_stack_)) out_.max_stack_ = static_cast<std::size_t>(depth_);
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("expression '" + std::string(text_) + "': " + why + " at position " +
                                std::to_string(pos_));
  }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  Expression& out_;
  std::size_t pos_ = 0;
  long depth_ = 0;
};

Expression Expression::parse(std::string_view text, const std::vector<std::string>& variables) {
  Expression out;
  out.text_ = std::string(text);
  ExpressionParser(out.text_, variables, out).run();
  return out;
}

double Expression::evaluate(std::span<const double> values) const {
  std::vector<double> stack;
  stack.reserve(max_stack_);
  for (const Instruction& ins : program_) {
    switch (ins.op) {
      case Op::constant:
        stack.push_back(ins.value);
        break;
      case Op::variable:
        stack.push_back(values[static_cast<std::size_t>(ins.index)]);
        break;
      case Op::neg:
        stack.back() = -stack.back();
        break;
      case Op::pow: {
        double base = stack.back();
        double acc = 1.0;
        for (int e = ins.index; e > 0; e >>= 1) {
          if (e & 1) acc *= base;
          base *= base;
        }
        stack.back() = acc;
        break;
      }
      default: {
        const double rhs = stack.back();
        stack.pop_back();
        double& lhs = stack.back();
        if (ins.op == Op::add) lhs += rhs;
        else if (ins.op == Op::sub) lhs -= rhs;
        else lhs *= rhs;
      }
    }
  }
  return stack.back();
}

}  // namespace ccgeom
