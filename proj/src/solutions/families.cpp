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

#include <algorithm>

#include "symkit/expr/parse.hpp"
#include "symkit/solutions/solutions.hpp"

namespace symkit {

namespace {

Expr P(const std::string& s) { return parse(s); }

Constraint nonzero(const std::string& s) {
  return {P(s), Constraint::Kind::kNonZero};
}
Constraint nonneg(const Expr& e) { return {e, Constraint::Kind::kNonNegative}; }

NumericBindings params(std::initializer_list<std::pair<const char*, double>> kv) {
  NumericBindings b;
  for (const auto& [k, v] : kv) b[sym::parameter(k)] = v;
  return b;
}

// mean +- root, upper branch taking + for u.
SolutionFamily pm(std::string id, std::string sys, const Expr& mean,
                  const Expr& root) {
  SolutionFamily f;
  f.id = std::move(id);
  f.system_id = std::move(sys);
  f.u = mean + root;
  f.v = mean - root;
  return f;
}

}  // namespace

std::string Constraint::str() const {
  return expr.str() + (kind == Kind::kNonZero ? " != 0" : " >= 0");
}

SolutionFamily SolutionFamily::swapped() const {
  SolutionFamily f = *this;
  std::swap(f.u, f.v);
  f.branch = branch == Branch::kUpper ? Branch::kLower : Branch::kUpper;
  return f;
}

SolutionFamily SolutionFamily::substituted(const SubstMap& m) const {
  SolutionFamily f = *this;
  f.u = substitute(u, m);
  f.v = substitute(v, m);
  for (auto& c : f.constraints) c.expr = substitute(c.expr, m);
  for (const auto& [s, e] : m) {
    if (e.is_constant()) f.sample.params.erase(s);
  }
  return f;
}

SKTSystem builtin_system(const std::string& id) {
  Expr nb;
  if (id == "3-1") {
    nb = Expr(1);
  } else if (id == "3-2") {
    nb = Expr(-1);
  } else if (id == "1-4") {
    nb = -P("b");
  } else {
    throw NotFound("unknown system id '" + id + "'");
  }
  SKTSystem s = SKTSystem::from_map(
      {{"d12", Expr(1)}, {"d21", Expr(1)}, {"c1", nb}, {"b2", nb}});
  return s;
}

std::vector<std::string> builtin_system_ids() { return {"3-1", "3-2", "1-4"}; }

std::vector<Expr> steady_test_basis() {
  return {Expr(1), P("1+x^2"), P("2+sin(x)")};
}

SolutionFamily steady_family(char kind, const std::string& system_id,
                             const Expr& f, const Expr& gh) {
  SolutionFamily s;
  s.system_id = system_id;
  s.sample.x0 = -1;
  s.sample.x1 = 1;
  switch (kind) {
    case 'a': {
      int sign = system_id == "3-1" ? 1 : system_id == "3-2" ? -1 : 0;
      if (sign == 0) throw DomainError("steady states need system 3-1 or 3-2");
      Expr ode = diff(f, sym::x(), 2) - Expr(sign) * f;
      if (!ode.is_zero()) {
        throw DomainError("f = " + f.str() + " does not solve the steady ODE");
      }
      s.id = "steady-3-13a";
      s.u = f / gh;
      s.v = gh;
      s.constraints.push_back({gh, Constraint::Kind::kNonZero});
      break;
    }
    case 'b':
      s.id = "steady-3-13b";
      s.u = gh;
      s.v = Expr(0);
      break;
    case 'c':
      s.id = "steady-3-13c";
      s.u = Expr(0);
      s.v = gh;
      break;
    default:
      throw NotFound(std::string("unknown steady kind '") + kind + "'");
  }
  return s;
}

SolutionFamily builtin_family(const std::string& id, Branch branch) {
  SolutionFamily f;
  if (id == "seed-3-5") {
    f.id = id;
    f.system_id = "3-1";
    f.u = P("alpha1*exp(alpha1*t)/(alpha2 + exp(alpha1*t))");
    f.v = P("-alpha1*alpha2/(alpha2 + exp(alpha1*t))");
    f.constraints = {nonzero("alpha2 + exp(alpha1*t)")};
    f.sample.params = params({{"alpha1", 1}, {"alpha2", 1}});
  } else if (id == "family-3-6") {
    Expr r = P("alpha1^2 + 4*p*(lambda1*exp(x) + lambda2*exp(-x))");
    f = pm(id, "3-1",
           P("(alpha1*exp(alpha1*t) - alpha1*alpha2)/"
             "(2*(alpha2 + exp(alpha1*t)))"),
           sqrt(r) / Expr(2));
    f.constraints = {nonzero("alpha2 + exp(alpha1*t)"), nonneg(r)};
    f.sample.params = params(
        {{"alpha1", 1}, {"alpha2", 1}, {"p", 0.1}, {"lambda1", 1}, {"lambda2", 0.5}});
  } else if (id == "family-3-7") {
    Expr r = P("alpha1^2 + 4*p*(lambda1*cos(x) + lambda2*sin(x))");
    f = pm(id, "3-2",
           P("(alpha1 + alpha1*alpha2*exp(alpha1*t))/"
             "(2*(1 - alpha2*exp(alpha1*t)))"),
           sqrt(r) / Expr(2));
    f.constraints = {nonzero("1 - alpha2*exp(alpha1*t)"), nonneg(r)};
    f.sample.params = params(
        {{"alpha1", 1}, {"alpha2", -1}, {"p", 0.1}, {"lambda1", 1}, {"lambda2", 0.5}});
  } else if (id == "steady-3-13a") {
    f = steady_family('a', "3-1", P("exp(x)"), Expr(1));
  } else if (id == "steady-3-13b") {
    f = steady_family('b', "3-1", Expr(0), P("2+sin(x)"));
  } else if (id == "steady-3-13c") {
    f = steady_family('c', "3-1", Expr(0), P("2+sin(x)"));
  } else if (id == "reduced-3-14a" || id == "reduced-3-14b" ||
             id == "reduced-3-14c") {
    char which = id.back();
    Expr q = P("lambda1*sin(x) - lambda2*cos(x)");
    Expr mean;
    Expr r;
    if (which == 'a') {
      mean = P("-1/t");
      r = q;
      f.constraints = {nonzero("t")};
      f.sample.params = params({{"lambda1", 1}, {"lambda2", -1}});
    } else if (which == 'b') {
      mean = P("alpha1*tan(alpha1*t)");
      r = q - P("alpha1^2");
      f.constraints = {nonzero("cos(alpha1*t)")};
      f.sample.params = params({{"alpha1", 0.5}, {"lambda1", 1}, {"lambda2", -1}});
    } else {
      mean = P("alpha1*(1 + alpha2*exp(2*alpha1*t))/(1 - alpha2*exp(2*alpha1*t))");
      r = q + P("alpha1^2");
      f.constraints = {nonzero("1 - alpha2*exp(2*alpha1*t)")};
      f.sample.params = params(
          {{"alpha1", 0.5}, {"alpha2", -1}, {"lambda1", 1}, {"lambda2", -1}});
    }
    f.id = id;
    f.system_id = "3-2";
    f.u = mean + sqrt(r);
    f.v = mean - sqrt(r);
    f.constraints.push_back(nonneg(r));
    f.sample.t0 = 0.5;
    f.sample.t1 = 1.5;
    f.sample.x0 = 0.2;
    f.sample.x1 = 1.3;
  } else {
    throw NotFound("unknown solution family '" + id + "'");
  }
  return branch == Branch::kUpper ? f : f.swapped();
}

std::vector<std::string> builtin_family_ids() {
  return {"seed-3-5",      "family-3-6",    "family-3-7",
          "steady-3-13a",  "steady-3-13b",  "steady-3-13c",
          "reduced-3-14a", "reduced-3-14b", "reduced-3-14c"};
}

}  // namespace symkit
