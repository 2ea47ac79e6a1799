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
#include <random>

#include "doctest.h"
#include "symkit/expr/parse.hpp"
#include "symkit/solutions/solutions.hpp"

using namespace symkit;

namespace {

Expr P(const char* s) { return parse(s); }

Expr par(const char* name) { return Expr(sym::parameter(name)); }

Scope phi_scope() {
  Scope s = Scope::standard();
  s.declare_function("phi1", kDepT);
  s.declare_function("phi2", kDepT);
  return s;
}

bool contains_equation(const std::vector<Expr>& eqs, const Expr& want) {
  for (const Expr& e : eqs) {
    if (e.equals(want) || e.equals(-want)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("every builtin family solves its system symbolically and numerically") {
  for (const auto& id : builtin_family_ids()) {
    for (Branch br : {Branch::kUpper, Branch::kLower}) {
      SolutionFamily f = builtin_family(id, br);
      SKTSystem sys = builtin_system(f.system_id);
      auto [r1, r2] = residual(sys, f);
      CHECK_MESSAGE(r1.is_zero(), id << ": " << r1.str());
      CHECK_MESSAGE(r2.is_zero(), id << ": " << r2.str());
      NumericCheck c = numeric_residual(sys, f);
      CHECK_MESSAGE(c.pass, id << " max " << c.max_residual);
      CHECK(c.points == 20);
    }
  }
}

TEST_CASE("the exp family does not solve the system with the opposite reaction") {
  SolutionFamily f = builtin_family("family-3-6");
  SKTSystem wrong = builtin_system("3-2");
  CHECK_FALSE(residual_is_zero(wrong, f));
  f.sample.t0 = f.sample.t1 = 0.3;
  f.sample.x0 = f.sample.x1 = 0.5;
  f.sample.params = bind_by_name(
      {{"alpha1", 1}, {"alpha2", 1}, {"p", 0.1}, {"lambda1", 1}, {"lambda2", 0}});
  NumericOptions one;
  one.points = 1;
  NumericCheck c = numeric_residual(wrong, f, one);
  CHECK_FALSE(c.pass);
  auto [r1, r2] = residual(wrong, f);
  NumericBindings b = f.sample.params;
  b[sym::t()] = 0.3;
  b[sym::x()] = 0.5;
  CHECK(std::fabs(eval_numeric(r1, b)) > 1e-3);
}

TEST_CASE("builtin family examples") {
  SolutionFamily seed = builtin_family("seed-3-5");
  SolutionFamily at0 = seed.substituted({{sym::parameter("alpha2"), Expr(0)}});
  CHECK(at0.u.equals(par("alpha1")));
  CHECK(at0.v.is_zero());

  SolutionFamily st = builtin_family("steady-3-13a");
  CHECK(st.u.equals(P("exp(x)")));
  CHECK(st.v.equals(Expr(1)));

  SolutionFamily r = builtin_family("reduced-3-14a");
  CHECK(r.u.equals(P("-1/t + sqrt(lambda1*sin(x) - lambda2*cos(x))")));
  CHECK(r.v.equals(P("-1/t - sqrt(lambda1*sin(x) - lambda2*cos(x))")));

  CHECK_THROWS_AS(builtin_family("family-9-9"), NotFound);
  CHECK_THROWS_AS(builtin_system("2-2"), NotFound);
}

TEST_CASE("steady states over the test basis") {
  struct Case {
    const char* sys;
    std::vector<const char*> fs;
  };
  for (const Case& c : {Case{"3-1", {"exp(x)", "exp(-x)", "2*exp(x) - exp(-x)"}},
                        Case{"3-2", {"cos(x)", "sin(x)", "cos(x) + 3*sin(x)"}}}) {
    SKTSystem sys = builtin_system(c.sys);
    for (const Expr& g : steady_test_basis()) {
      for (const char* f : c.fs) {
        SolutionFamily a = steady_family('a', c.sys, P(f), g);
        CHECK_MESSAGE(residual_is_zero(sys, a), c.sys << " f=" << f);
      }
      CHECK(residual_is_zero(sys, steady_family('b', c.sys, Expr(0), g)));
      CHECK(residual_is_zero(sys, steady_family('c', c.sys, Expr(0), g)));
    }
  }
  CHECK_THROWS_AS(steady_family('a', "3-1", P("cos(x)"), Expr(1)), DomainError);
  CHECK_FALSE(residual_is_zero(builtin_system("3-1"),
                               steady_family('a', "3-2", P("cos(x)"), Expr(1))));
}

TEST_CASE("branch symmetry") {
  for (const auto& id : builtin_family_ids()) {
    SolutionFamily up = builtin_family(id, Branch::kUpper);
    SolutionFamily lo = builtin_family(id, Branch::kLower);
    CHECK(lo.u.equals(up.v));
    CHECK(lo.v.equals(up.u));
    CHECK(lo.branch == Branch::kLower);
    for (const char* s : {"3-1", "3-2", "1-4"}) {
      SKTSystem sys = builtin_system(s);
      auto [a1, a2] = residual(sys, up);
      auto [b1, b2] = residual(sys, lo);
      CHECK(a1.equals(b2));
      CHECK(a2.equals(b1));
    }
  }
}

TEST_CASE("symbolic derivatives agree with finite differences") {
  // Independent check of the jet values fed to the numeric residual.
  SolutionFamily f = builtin_family("family-3-7");
  NumericBindings b = f.sample.params;
  const double h = 1e-4;
  for (double t : {0.1, 0.6}) {
    for (double x : {-0.4, 0.7}) {
      auto at = [&](const Expr& e, double tt, double xx) {
        b[sym::t()] = tt;
        b[sym::x()] = xx;
        return eval_numeric(e, b);
      };
      for (const Expr* w : {&f.u, &f.v}) {
        double ut = (at(*w, t + h, x) - at(*w, t - h, x)) / (2 * h);
        double uxx = (at(*w, t, x + h) - 2 * at(*w, t, x) + at(*w, t, x - h)) / (h * h);
        CHECK(std::fabs(ut - at(diff(*w, sym::t()), t, x)) < 1e-6);
        CHECK(std::fabs(uxx - at(diff(*w, sym::x(), 2), t, x)) < 1e-5);
      }
    }
  }
}

TEST_CASE("group orbit") {
  Expr p = par("p");
  Expr l1 = par("lambda1");
  Expr l2 = par("lambda2");
  SolutionFamily seed = builtin_family("seed-3-5");

  SolutionFamily id0 = group_orbit(seed, Expr(0), l1, l2, Generator::kX1);
  CHECK(id0.u.equals(seed.u));
  CHECK(id0.v.equals(seed.v));
  SolutionFamily lo = seed.swapped();
  SolutionFamily id1 = group_orbit(lo, Expr(0), l1, l2, Generator::kX1);
  CHECK(id1.u.equals(lo.u));
  CHECK(id1.v.equals(lo.v));

  SolutionFamily orb = group_orbit(seed, p, l1, l2, Generator::kX1,
                                   OrbitBranch::kUpper);
  SolutionFamily fam = builtin_family("family-3-6");
  CHECK(orb.u.equals(fam.u));
  CHECK(orb.v.equals(fam.v));
  CHECK(residual_is_zero(builtin_system("3-1"), orb));

  // The auto branch agrees on the sample box (alpha1 = 1 > 0).
  SolutionFamily orb_auto = group_orbit(seed, p, l1, l2, Generator::kX1);
  CHECK(orb_auto.u.equals(fam.u));

  // Group law.
  Expr p1 = P("p");
  Expr p2 = P("alpha3");
  SolutionFamily twice = group_orbit(
      group_orbit(seed, p1, l1, l2, Generator::kX1, OrbitBranch::kUpper), p2, l1,
      l2, Generator::kX1, OrbitBranch::kUpper);
  SolutionFamily once =
      group_orbit(seed, p1 + p2, l1, l2, Generator::kX1, OrbitBranch::kUpper);
  CHECK(twice.u.equals(once.u));
  CHECK(twice.v.equals(once.v));

  // The trig group maps the trig family to itself.
  SolutionFamily f7 = builtin_family("family-3-7");
  SolutionFamily orb7 = group_orbit(f7, P("alpha3"), P("lambda3"), P("lambda4"),
                                    Generator::kX2, OrbitBranch::kUpper);
  CHECK(residual_is_zero(builtin_system("3-2"), orb7));
}

TEST_CASE("orbit branch selection rejects sign changes") {
  SolutionFamily f;
  f.id = "mixed";
  f.system_id = "3-1";
  f.u = P("x");
  f.v = Expr(0);
  CHECK_THROWS_AS(group_orbit(f, P("p"), Expr(1), Expr(0), Generator::kX1),
                  DomainError);
  f.sample.x0 = 0.5;
  SolutionFamily g = group_orbit(f, P("p"), Expr(1), Expr(0), Generator::kX1);
  CHECK(g.u.equals(P("x/2 + sqrt(x^2 + 4*p*exp(x))/2")));
}

TEST_CASE("orbit residual property over random parameters") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> U(0.2, 1.0);
  SKTSystem sys = builtin_system("3-1");
  SolutionFamily seed = builtin_family("seed-3-5");
  SolutionFamily orb = group_orbit(seed, P("p"), P("lambda1"), P("lambda2"),
                                   Generator::kX1, OrbitBranch::kUpper);
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    NumericBindings b = bind_by_name({{"alpha1", 0.5 + U(rng)},
                                      {"alpha2", U(rng)},
                                      {"p", U(rng)},
                                      {"lambda1", U(rng)},
                                      {"lambda2", U(rng)}});
    seed.sample.params = b;
    orb.sample.params = b;
    if (!numeric_residual(sys, seed).pass) continue;
    NumericCheck c = numeric_residual(sys, orb);
    CHECK_MESSAGE(c.pass, "tuple " << i << " max " << c.max_residual);
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("orbits of steady states stay steady states") {
  SKTSystem sys = builtin_system("3-1");
  for (const Expr& g : steady_test_basis()) {
    for (char kind : {'a', 'b'}) {
      SolutionFamily st = steady_family(kind, "3-1", P("exp(x)"), g);
      SolutionFamily o = group_orbit(st, P("p"), P("lambda1"), P("lambda2"),
                                     Generator::kX1, OrbitBranch::kUpper);
      CHECK(residual_is_zero(sys, o));
      // Membership: time independent, v* plays g, and f* = u* v* solves f'' = f.
      CHECK_FALSE(o.u.depends_on(sym::t()));
      CHECK_FALSE(o.v.depends_on(sym::t()));
      Expr f = o.u * o.v;
      CHECK((diff(f, sym::x(), 2) - f).is_zero());
      SolutionFamily again = steady_family('a', "3-1", f, o.v);
      CHECK(again.u.equals(o.u));
    }
  }
}

TEST_CASE("reduction by the trig operator") {
  SKTSystem sys = builtin_system("3-2");
  VectorField X{Expr(0), Expr(1), P("(lambda1*cos(x) + lambda2*sin(x))/(u-v)"),
                P("-(lambda1*cos(x) + lambda2*sin(x))/(u-v)"), "X"};
  ReductionAnsatz R = reduce_ansatz(sys, X);
  Scope sc = phi_scope();
  REQUIRE(R.odes.size() == 2);
  CHECK(contains_equation(R.odes, parse("phi1_t + 2*phi2", sc)));
  CHECK(contains_equation(R.odes, parse("phi1*phi1_t + 2*phi2_t", sc)));
  for (const Expr& e : R.odes) {
    CHECK_FALSE(e.depends_on(sym::x()));
  }

  // phi = (-2/t, -1/t^2) regenerates the first reduced solution.
  Expr f1 = P("-2/t");
  Expr f2 = P("-1/t^2");
  for (const Expr& e : R.odes) CHECK(with_phi(e, f1, f2).is_zero());
  SolutionFamily a = builtin_family("reduced-3-14a");
  CHECK(with_phi(R.u, f1, f2).equals(a.u));
  CHECK(with_phi(R.v, f1, f2).equals(a.v));

  // Trivial branch.
  for (const Expr& e : R.odes) CHECK(with_phi(e, Expr(0), Expr(0)).is_zero());
  CHECK(with_phi(R.u, Expr(0), Expr(0))
            .equals(P("sqrt(lambda1*sin(x) - lambda2*cos(x))")));
  CHECK(with_phi(R.v, Expr(0), Expr(0)).equals(-with_phi(R.u, Expr(0), Expr(0))));

  // All three branches: phi1 = u + v, phi2 from the invariant, with beta.
  struct Branch3 {
    const char* id;
    const char* beta;
  };
  for (const Branch3& b : {Branch3{"reduced-3-14a", "0"},
                           Branch3{"reduced-3-14b", "2*alpha1^2"},
                           Branch3{"reduced-3-14c", "-2*alpha1^2"}}) {
    SolutionFamily s = builtin_family(b.id);
    Expr phi1 = s.u + s.v;
    Expr w2 = (s.u - s.v).pow(2);
    Expr phi2 = (w2 - phi1.pow(2) - Expr(4) * P("lambda1*sin(x) - lambda2*cos(x)")) /
                Expr(4);
    CHECK_FALSE(phi2.depends_on(sym::x()));
    for (const Expr& e : R.odes) CHECK_MESSAGE(with_phi(e, phi1, phi2).is_zero(), b.id);
    CHECK(with_phi(R.u, phi1, phi2).equals(s.u));
    CHECK(with_phi(R.integrated.first, phi1, phi2).is_zero());
    Expr second = substitute(with_phi(R.integrated.second, phi1, phi2),
                             {{sym::parameter("beta"), P(b.beta)}});
    CHECK_MESSAGE(second.is_zero(), b.id);
    CHECK(residual_is_zero(sys, s));
  }

  VectorField bad = X;
  bad.xi1 = Expr(2);
  CHECK_THROWS_AS(reduce_ansatz(sys, bad), DomainError);
  bad = X;
  bad.eta1 = P("u/(u-v)");
  bad.eta2 = -bad.eta1;
  CHECK_THROWS_AS(reduce_ansatz(sys, bad), DomainError);
}

TEST_CASE("third reduced solution is a case of the trig family") {
  SolutionFamily c = builtin_family("reduced-3-14c");
  SolutionFamily f7 = builtin_family("family-3-7");
  SubstMap rename{{sym::parameter("alpha1"), P("2*alpha1")},
                  {sym::parameter("p"), Expr(1)},
                  {sym::parameter("lambda1"), P("-lambda2")},
                  {sym::parameter("lambda2"), P("lambda1")}};
  SolutionFamily m = f7.substituted(rename);
  CHECK(m.u.equals(c.u));
  CHECK(m.v.equals(c.v));
}

TEST_CASE("flux check") {
  SolutionFamily f7 =
      builtin_family("family-3-7").substituted({{sym::parameter("lambda2"), Expr(0)}});
  CHECK(flux_check(f7, Expr(0), P("pi")).pass);
  FluxReport half = flux_check(f7, Expr(0), P("pi/2"));
  CHECK_FALSE(half.pass);
  NumericBindings b = bind_by_name({{"alpha1", 1}, {"alpha2", -1}, {"p", 0.1},
                                    {"lambda1", 1}, {"t", 0.4}});
  bool nonzero = false;
  for (const auto& [name, val] : half.values) {
    if (name == "u_x(1/2*pi)" || name.rfind("u_x(", 0) == 0) {
      if (std::fabs(eval_numeric(val, b)) > 1e-6) nonzero = true;
    }
  }
  CHECK(nonzero);
  CHECK(flux_check(builtin_family("seed-3-5"), P("-3"), P("7/2")).pass);

  SolutionFamily ra = builtin_family("reduced-3-14a")
                          .substituted({{sym::parameter("lambda2"), Expr(0)}});
  CHECK_THROWS_AS(flux_check(ra, Expr(0), P("pi/2")), DomainError);
}

TEST_CASE("logistic transformation") {
  Expr a = par("a");
  Expr b = par("b");
  Expr d1 = par("d1");
  Expr d2 = par("d2");
  SolutionFamily seed = builtin_family("seed-3-5");
  SolutionFamily L = to_logistic(seed, a, b, d1, d2);
  CHECK(residual_is_zero(logistic_system(a, b, d1, d2, -1), L));
  CHECK_FALSE(residual_is_zero(logistic_system(a, b, d1, d2, 1), L));
  CHECK(numeric_residual(logistic_system(a, b, d1, d2, -1), L).pass);

  SolutionFamily L7 = to_logistic(builtin_family("family-3-7"), a, b, d1, d2);
  CHECK(residual_is_zero(logistic_system(a, b, d1, d2, 1), L7));

  // Unit parameters: both routes agree.
  SubstMap ones{{sym::parameter("a"), Expr(1)}, {sym::parameter("b"), Expr(1)},
                {sym::parameter("d1"), Expr(1)}, {sym::parameter("d2"), Expr(1)}};
  SolutionFamily direct = to_logistic(seed, Expr(1), Expr(1), Expr(1), Expr(1));
  SolutionFamily routed = L.substituted(ones);
  CHECK(direct.u.equals(routed.u));
  auto [r1, r2] = residual(logistic_system(Expr(1), Expr(1), Expr(1), Expr(1), -1),
                           direct);
  CHECK(r1.is_zero());
  CHECK(r2.is_zero());

  CHECK_THROWS_AS(logistic_time(0.0, 1, 1), DomainError);
  CHECK_THROWS_AS(logistic_time(-1.0, 1, 1), DomainError);
  CHECK(logistic_time(std::exp(2.0), 1, 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(to_logistic(seed, Expr(0), b, d1, d2), DomainError);
  CHECK_THROWS_AS(to_logistic(seed, a, Expr(-1), d1, d2), DomainError);
}

TEST_CASE("solution files") {
  SolutionFamily f = read_solution(
      "[solution]\n"
      "id = seed\n"
      "system = 3-1\n"
      "u = alpha1*exp(alpha1*t)/(alpha2 + exp(alpha1*t))\n"
      "v = -alpha1*alpha2/(alpha2 + exp(alpha1*t))\n"
      "branch = upper\n"
      "constraints = alpha2 + exp(alpha1*t) != 0\n"
      "params = alpha1=1, alpha2=0.5\n"
      "t_range = 0, 2\n");
  CHECK(f.constraints.size() == 1);
  CHECK(f.sample.t1 == 2.0);
  NumericCheck c = numeric_residual(builtin_system(f.system_id), f);
  CHECK(c.pass);
  CHECK(csv_row(f, c).rfind("seed,3-1,", 0) == 0);
  CHECK(csv_header() == "family,system,max_residual,points,verdict");
  CHECK_THROWS_AS(read_solution("[solution]\nu = t\n"), ParseError);
  CHECK_THROWS_AS(read_solution("[solution]\nu = t\nv = x\nconstraints = t\n"),
                  ParseError);
}
