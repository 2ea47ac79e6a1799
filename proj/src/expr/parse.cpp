/* Copyright 2026 The symkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "symkit/expr/parse.hpp"

#include <cctype>
#include <regex>

namespace symkit {

namespace {

const std::set<std::string, std::less<>>& standard_parameters() {
  static const std::set<std::string, std::less<>> kNames = {
      "d1", "d2", "d11", "d12", "d21", "d22", "a1", "a2", "b1", "b2",
      "c1", "c2", "a",   "b",   "c",   "p",   "beta", "e1", "e2"};
  return kNames;
}

std::optional<Symbol> jet_symbol(std::string_view name) {
  static const std::map<std::string, std::pair<int, int>, std::less<>> kSuffix =
      {{"", {0, 0}},   {"_t", {1, 0}},  {"_x", {0, 1}},
       {"_xx", {0, 2}}, {"_tx", {1, 1}}, {"_tt", {2, 0}}};
  if (name.empty() || (name[0] != 'u' && name[0] != 'v')) return std::nullopt;
  auto it = kSuffix.find(name.substr(1));
  if (it == kSuffix.end()) return std::nullopt;
  return sym::jet(name[0] == 'u' ? 1 : 2, it->second.first, it->second.second);
}

class Parser {
 public:
  Parser(std::string_view text, const Scope& scope)
      : text_(text), scope_(scope) {}

  Expr run() {
    Expr e = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, peek()) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < text_.size()
               ? "expected '" + std::string(1, c) + "'"
               : "unexpected end of input, expected '" + std::string(1, c) + "'");
    }
  }

  Expr expression() {
    Expr e = term();
    for (;;) {
      if (accept('+')) {
        e = e + term();
      } else if (accept('-')) {
        e = e - term();
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      if (accept('*')) {
        e = e * factor();
      } else if (peek() == '/') {
        std::size_t at = pos_;
        ++pos_;
        Expr d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        e = e / d;
      } else {
        return e;
      }
    }
  }

  Expr factor() {
    Expr b = base();
    if (accept('^')) {
      skip_ws();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
        skip_ws();
      }
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected integer exponent");
      }
      long n = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + (text_[pos_++] - '0');
        if (n > 10000) fail("exponent too large");
      }
      int e = static_cast<int>(neg ? -n : n);
      if (e < 0 && b.is_zero()) fail("zero raised to a negative power");
      return b.pow(e);
    }
    return b;
  }

  Expr base() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '-') {
      ++pos_;
      return -base();
    }
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr number() {
    std::size_t start = pos_;
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_++];
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::string frac;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        frac += text_[pos_++];
      }
      if (digits.empty() && frac.empty()) {
        pos_ = start;
        fail("malformed number");
      }
      mpz_class num(digits.empty() ? "0" : digits);
      mpz_class scale = 1;
      for (char ch : frac) {
        num = num * 10 + (ch - '0');
        scale *= 10;
      }
      Rational r(num, scale);
      r.canonicalize();
      return Expr(r);
    }
    // Rational literal "n/d": only when a digit follows the slash directly.
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      std::size_t slash = pos_;
      ++pos_;
      std::string den;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        den += text_[pos_++];
      }
      if (pos_ < text_.size() && text_[pos_] == '.') {
        pos_ = slash;  // "1/2.5" is a division
      } else {
        mpz_class d(den);
        if (d == 0) {
          pos_ = slash;
          fail("division by zero");
        }
        Rational r{mpz_class(digits), d};
        r.canonicalize();
        return Expr(r);
      }
    }
    return Expr(Rational(mpz_class(digits)));
  }

  Expr identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (peek() == '(') {
      static const std::set<std::string, std::less<>> kHeads = {
          "exp", "sin", "cos", "sqrt", "tan"};
      if (!kHeads.count(name)) {
        pos_ = start;
        fail("unknown function '" + std::string(name) + "'");
      }
      ++pos_;
      Expr arg = expression();
      expect(')');
      try {
        if (name == "exp") return exp(arg);
        if (name == "sin") return sin(arg);
        if (name == "cos") return cos(arg);
        if (name == "tan") return tan(arg);
        return sqrt(arg);
      } catch (const DomainError& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (name == "t" || name == "x") return Expr(sym::base(name));
    if (name == "pi") return Expr(sym::pi());
    if (auto j = jet_symbol(name)) return Expr(*j);
    if (auto it = scope_.functions.find(name); it != scope_.functions.end()) {
      return Expr(it->second);
    }
    if (scope_.is_parameter(name)) return Expr(sym::parameter(name));
    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view text_;
  const Scope& scope_;
  std::size_t pos_ = 0;
};

}  // namespace

const Scope& Scope::standard() {
  static const Scope kScope;
  return kScope;
}

bool Scope::is_parameter(std::string_view name) const {
  static const std::regex kFamily("(alpha|lambda)[0-9]*");
  if (standard_parameters().count(name) || extra_parameters.count(name)) {
    return true;
  }
  return std::regex_match(name.begin(), name.end(), kFamily);
}

void Scope::declare_function(const std::string& base, std::uint8_t deps,
                             int max_order) {
  std::vector<std::array<int, 4>> frontier = {{0, 0, 0, 0}};
  for (int order = 0; order <= max_order; ++order) {
    std::vector<std::array<int, 4>> next;
    for (const auto& multi : frontier) {
      Symbol f = sym::function(base, deps, multi);
      functions.emplace(f.name(), f);
      for (int c = 0; c < 4; ++c) {
        if (!(deps & (1u << c))) continue;
        auto m = multi;
        ++m[c];
        bool sorted_ok = true;
        // Generate each multi-index once: only bump coordinates >= the last
        // bumped one.
        for (int k = c + 1; k < 4; ++k) {
          if (multi[k] > 0) sorted_ok = false;
        }
        if (sorted_ok) next.push_back(m);
      }
    }
    frontier = std::move(next);
  }
}

Expr parse(std::string_view text, const Scope& scope) {
  return Parser(text, scope).run();
}

SubstMap parse_bindings(const std::map<std::string, std::string>& kv,
                        const Scope& scope) {
  SubstMap out;
  for (const auto& [k, v] : kv) {
    Expr lhs = parse(k, scope);
    if (lhs.num().size() != 1 || !lhs.is_polynomial() ||
        lhs.num().leading_coefficient() != 1 ||
        lhs.num().leading_monomial().factors().size() != 1 ||
        lhs.num().leading_monomial().factors()[0].second != 1) {
      throw ParseError("binding target '" + k + "' is not a symbol", 1);
    }
    out[lhs.num().leading_monomial().factors()[0].first] = parse(v, scope);
  }
  return out;
}

}  // namespace symkit
