// Copyright 2026 The stci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stci/core/parse.hpp"

#include <cctype>

#include "stci/core/errors.hpp"

namespace stci {

namespace {

class Parser {
 public:
  Parser(std::string_view text, VariableSet ring, Field field, std::size_t base)
      : text_(text), ring_(ring), field_(field), base_(base) {}

  Polynomial parse() {
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      mpz_class e = integer();
      if (e > Monomial::kMaxExponent) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<std::uint32_t>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      std::size_t den_pos = pos_;
      if (accept('/')) {
        den_pos = pos_;
        den = integer();
      }
      try {
        return Polynomial::constant(ring_, field_, field_.from_ratio(num, den));
      } catch (const InvalidArgument& e) {
        pos_ = den_pos;
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto v = var_from_name(name);
      if (!v || !ring_.contains(*v)) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, field_, *v);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  VariableSet ring_;
  Field field_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, VariableSet ring, Field field) {
  return Parser(text, ring, field, 0).parse();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, VariableSet ring, Field field) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ';' || text[i] == '\n') {
      std::string_view item = text.substr(start, i - start);
      bool blank = true;
      for (char c : item)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) out.push_back(Parser(item, ring, field, start).parse());
      start = i + 1;
    }
  }
  return out;
}

}  // namespace stci
