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

#include <cmath>

#include "symkit/expr/parse.hpp"
#include "symkit/solutions/solutions.hpp"

namespace symkit {

namespace {

constexpr int kSignGrid = 100;

// +1 if u >= v on the sample box, -1 if u < v, throws otherwise.
int sample_sign(const SolutionFamily& sol) {
  Expr w = sol.u - sol.v;
  bool pos = false;
  bool neg = false;
  NumericBindings b = sol.sample.params;
  for (int i = 0; i < kSignGrid; ++i) {
    for (int j = 0; j < kSignGrid; ++j) {
      b[sym::t()] = sol.sample.t0 +
                    (sol.sample.t1 - sol.sample.t0) * i / (kSignGrid - 1);
      b[sym::x()] = sol.sample.x0 +
                    (sol.sample.x1 - sol.sample.x0) * j / (kSignGrid - 1);
      double d;
      try {
        d = eval_numeric(w, b);
      } catch (const EvalError& e) {
        throw DomainError(std::string("u - v not evaluable on the sample box: ") +
                          e.what());
      }
      (d >= 0 ? pos : neg) = true;
      if (pos && neg) {
        throw DomainError("u - v changes sign on the sample box of " + sol.id);
      }
    }
  }
  return neg ? -1 : 1;
}

}  // namespace

Expr generator_profile(Generator g, const Expr& l1, const Expr& l2) {
  if (g == Generator::kX1) return l1 * parse("exp(x)") + l2 * parse("exp(-x)");
  return l1 * parse("cos(x)") + l2 * parse("sin(x)");
}

VectorField generator_field(Generator g, const Expr& l1, const Expr& l2) {
  Expr c = generator_profile(g, l1, l2) / parse("u - v");
  return {Expr(0), Expr(0), c, -c, g == Generator::kX1 ? "X1" : "X2"};
}

SolutionFamily group_orbit(const SolutionFamily& sol, const Expr& p,
                           const Expr& l1, const Expr& l2, Generator g,
                           OrbitBranch branch) {
  int sign;
  switch (branch) {
    case OrbitBranch::kUpper: sign = 1; break;
    case OrbitBranch::kLower: sign = -1; break;
    default: sign = sample_sign(sol);
  }
  Expr r = (sol.u - sol.v).pow(2) + Expr(4) * p * generator_profile(g, l1, l2);
  // At p = 0 the root is |u - v|, which the branch fixes exactly.
  Expr half_root = p.is_zero() ? Expr(sign) * (sol.u - sol.v) / Expr(2)
                               : sqrt(r) / Expr(2);
  Expr mean = (sol.u + sol.v) / Expr(2);
  SolutionFamily out = sol;
  out.id = sol.id + "*";
  out.u = sign > 0 ? mean + half_root : mean - half_root;
  out.v = sign > 0 ? mean - half_root : mean + half_root;
  if (!p.is_zero()) out.constraints.push_back({r, Constraint::Kind::kNonNegative});
  return out;
}

SKTSystem logistic_system(const Expr& a, const Expr& b, const Expr& d1,
                          const Expr& d2, int sign) {
  Expr s(sign);
  return SKTSystem::from_map({{"d12", d1},
                              {"d21", d2},
                              {"a1", a * b},
                              {"a2", a * b},
                              {"c1", -s * b * d1},
                              {"b2", -s * b * d2}});
}

double logistic_time(double t, double a, double b) {
  if (!(t > 0)) throw DomainError("logistic time needs t > 0");
  if (a * b == 0) throw DomainError("logistic time needs a b != 0");
  return std::log(t) / (a * b);
}

SolutionFamily to_logistic(const SolutionFamily& sol, const Expr& a,
                           const Expr& b, const Expr& d1, const Expr& d2) {
  if (sol.system_id != "3-1" && sol.system_id != "3-2") {
    throw DomainError("to_logistic needs a solution of system 3-1 or 3-2");
  }
  if (a.is_zero()) throw DomainError("to_logistic needs a != 0");
  if (b.is_constant() && !(b.constant_value() > 0)) {
    throw DomainError("to_logistic needs b > 0");
  }
  if (d1.is_zero() || d2.is_zero()) {
    throw DomainError("to_logistic needs d1, d2 != 0");
  }
  Expr t_old = exp(a * b * Expr(sym::t()));
  SubstMap m{{sym::t(), t_old}, {sym::x(), sqrt(b) * Expr(sym::x())}};
  SolutionFamily out = sol;
  out.id = sol.id + "@logistic";
  out.system_id = "3-8";
  out.u = a * t_old * substitute(sol.u, m) / d2;
  out.v = a * t_old * substitute(sol.v, m) / d1;
  for (auto& c : out.constraints) c.expr = substitute(c.expr, m);

  // Sample box: image of the original box restricted to t > 0.
  NumericBindings& pb = out.sample.params;
  for (const Expr* e : {&a, &b, &d1, &d2}) {
    for (Symbol s : e->symbols()) {
      if (s.kind() == SymbolKind::kParameter && !pb.count(s)) pb[s] = 1.0;
    }
  }
  double av = eval_numeric(a, pb);
  double bv = eval_numeric(b, pb);
  if (!(bv > 0)) throw DomainError("to_logistic needs b > 0");
  double t0 = std::max(sol.sample.t0, 0.1);
  double t1 = std::max(sol.sample.t1, t0 + 1.0);
  double s0 = logistic_time(t0, av, bv);
  double s1 = logistic_time(t1, av, bv);
  out.sample.t0 = std::min(s0, s1);
  out.sample.t1 = std::max(s0, s1);
  out.sample.x0 = sol.sample.x0 / std::sqrt(bv);
  out.sample.x1 = sol.sample.x1 / std::sqrt(bv);
  return out;
}

}  // namespace symkit
