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

#include "symkit/expr/eval.hpp"

#include <cmath>
#include <numbers>

#include "symkit/expr/parse.hpp"

namespace symkit {

namespace {

class Evaluator {
 public:
  Evaluator(const NumericBindings& b, double guard) : b_(b), guard_(guard) {}

  double expr(const Expr& e) {
    double n = poly(e.num());
    double d = 1.0;
    for (const auto& f : e.den()) {
      double v = poly(f.poly);
      if (!(std::fabs(v) >= guard_) || v == 0.0) {
        throw GuardViolation("denominator below guard", render(f.poly));
      }
      d *= std::pow(v, f.mult);
    }
    return n / d;
  }

  double poly(const Poly& p) {
    double sum = 0.0;
    for (const auto& [m, c] : p.terms()) {
      double term = c.get_d();
      for (const auto& [s, e] : m.factors()) term *= std::pow(value(s), e);
      sum += term;
    }
    return sum;
  }

 private:
  double value(Symbol s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    double v = compute(s);
    if (!std::isfinite(v)) {
      throw EvalError("non-finite value for " + s.name());
    }
    cache_.emplace(s, v);
    return v;
  }

  double compute(Symbol s) {
    auto it = b_.find(s);
    if (it != b_.end()) return it->second;
    if (s.kind() == SymbolKind::kConstant) return std::numbers::pi;
    if (!s.is_atom()) throw EvalError("unbound symbol " + s.name());
    const SymbolData& d = s.data();
    double a = expr(*d.arg);
    switch (d.head) {
      case AtomHead::kExp:
        return std::exp(a);
      case AtomHead::kSin:
        return std::sin(a);
      case AtomHead::kCos:
        return std::cos(a);
      case AtomHead::kSqrt:
        if (!(a >= guard_) || a < 0.0) {
          throw GuardViolation("radicand below guard", d.arg->str());
        }
        return std::sqrt(a);
    }
    return 0.0;
  }

  const NumericBindings& b_;
  double guard_;
  std::unordered_map<Symbol, double, SymbolHash> cache_;
};

}  // namespace

double eval_numeric(const Expr& e, const NumericBindings& bindings,
                    double guard) {
  return Evaluator(bindings, guard).expr(e);
}

NumericBindings bind_by_name(
    const std::unordered_map<std::string, double>& by_name) {
  NumericBindings out;
  for (const auto& [name, v] : by_name) {
    Expr s = parse(name);
    if (s.num().size() != 1 || s.num().leading_monomial().factors().size() != 1) {
      throw EvalError("not a symbol: " + name);
    }
    out[s.num().leading_monomial().factors()[0].first] = v;
  }
  return out;
}

}  // namespace symkit
