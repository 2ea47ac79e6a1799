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

// Text rendering. Output always re-parses to an equal expression: a leading
// negative term whose first factor carries a power is written "-1*x^2"
// because the grammar reads "-x^2" as (-x)^2, and exp powers are written as
// exp(k*(arg)).

#include <sstream>

#include "symkit/expr/expr.hpp"

namespace symkit {

namespace {

std::string render_factor(Symbol s, int e) {
  if (s.is_atom(AtomHead::kExp) && e != 1) {
    return "exp(" + std::to_string(e) + "*(" + s.data().arg->str() + "))";
  }
  std::string base = s.name();
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

std::string render(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [s, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += render_factor(s, e);
  }
  return out;
}

std::string render(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = m.empty() ? "" : render(m);
    if (m.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      // "-x^2" would re-parse as (-x)^2.
      bool powered_head = first && neg && m.factors().front().second != 1;
      bool exp_head = first && neg &&
                      m.factors().front().first.is_atom(AtomHead::kExp);
      if (powered_head || exp_head) out += "1*";
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
    first = false;
  }
  return out;
}

std::string Expr::str() const {
  if (den_.empty()) return render(num_);
  std::string out = "(" + render(num_) + ")/(";
  bool first = true;
  for (const auto& f : den_) {
    if (!first) out += '*';
    first = false;
    out += "(" + render(f.poly) + ")";
    if (f.mult != 1) out += "^" + std::to_string(f.mult);
  }
  return out + ")";
}

}  // namespace symkit
