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

#include "doctest.h"
#include "symkit/expr/parse.hpp"
#include "symkit/jet/jet.hpp"

using namespace symkit;

namespace {

Expr P(const char* s) { return parse(s); }

VectorField field(const char* xi0, const char* xi1, const char* eta1,
                  const char* eta2) {
  return {P(xi0), P(xi1), P(eta1), P(eta2), ""};
}

const Scope& opaque_scope() {
  static const Scope s = [] {
    Scope sc = Scope::standard();
    sc.declare_function("xi0", kDepT | kDepX | kDepU | kDepV);
    sc.declare_function("xi1", kDepT | kDepX | kDepU | kDepV);
    sc.declare_function("eta1", kDepT | kDepX | kDepU | kDepV);
    sc.declare_function("eta2", kDepT | kDepX | kDepU | kDepV);
    return sc;
  }();
  return s;
}

VectorField opaque_field() {
  const Scope& s = opaque_scope();
  return {parse("xi0", s), parse("xi1", s), parse("eta1", s),
          parse("eta2", s), ""};
}

}  // namespace

TEST_CASE("total derivatives") {
  CHECK(total_derivative(P("u*v"), Direction::kX).equals(P("u_x*v + u*v_x")));
  CHECK(total_derivative(P("u_x"), Direction::kT).equals(P("u_tx")));
  CHECK(total_derivative(P("t*x*u"), Direction::kT).equals(P("x*u + t*x*u_t")));
  const Scope& s = opaque_scope();
  CHECK(total_derivative(parse("eta1", s), Direction::kX)
            .equals(parse("eta1_x + eta1_u*u_x + eta1_v*v_x", s)));
  CHECK_THROWS_AS(total_derivative(P("u_xx"), Direction::kX), OrderOverflow);
}

TEST_CASE("D_t and D_x commute on first-order expressions") {
  Expr f = P("u*v + t*u^2 + exp(x)*v");
  Expr a = total_derivative(total_derivative(f, Direction::kX), Direction::kT);
  Expr b = total_derivative(total_derivative(f, Direction::kT), Direction::kX);
  CHECK(a.equals(b));
}

TEST_CASE("prolongation of translations vanishes") {
  for (auto X : {field("0", "1", "0", "0"), field("1", "0", "0", "0")}) {
    ProlongedField pr = prolong2(X);
    for (int k = 0; k < 2; ++k) {
      CHECK(pr.rho_t[k].is_zero());
      CHECK(pr.rho_x[k].is_zero());
      CHECK(pr.sigma_tt[k].is_zero());
      CHECK(pr.sigma_tx[k].is_zero());
      CHECK(pr.sigma_xx[k].is_zero());
    }
  }
}

TEST_CASE("prolongation of u d/du") {
  ProlongedField pr = prolong2(field("0", "0", "u", "0"));
  CHECK(pr.rho_t[0].equals(P("u_t")));
  CHECK(pr.rho_x[0].equals(P("u_x")));
  CHECK(pr.sigma_xx[0].equals(P("u_xx")));
  CHECK(pr.sigma_tt[0].equals(P("u_tt")));
  CHECK(pr.rho_x[1].is_zero());
}

TEST_CASE("prolongation of t d/dt") {
  ProlongedField pr = prolong2(field("t", "0", "0", "0"));
  CHECK(pr.rho_t[0].equals(P("-u_t")));
  CHECK(pr.rho_x[0].is_zero());
  CHECK(pr.sigma_tt[0].equals(P("-2*u_tt")));
  CHECK(pr.sigma_tx[0].equals(P("-u_tx")));
  CHECK(pr.sigma_xx[0].is_zero());
}

TEST_CASE("Galilei-type field") {
  ProlongedField pr = prolong2(field("0", "t", "x*u", "0"));
  CHECK(pr.rho_x[0].equals(P("u + x*u_x")));
  CHECK(pr.rho_t[0].equals(P("x*u_t - u_x")));
  CHECK(pr.sigma_xx[0].equals(P("2*u_x + x*u_xx")));
}

TEST_CASE("mixed second coefficient is symmetric") {
  for (auto X : {field("t^2", "t*x", "x*u - t*v", "u*v"),
                 field("exp(t)", "sin(x)", "u^2", "x*v"), opaque_field()}) {
    ProlongedField pr = prolong2(X);
    auto xt = sigma_xt(pr);
    CHECK(xt[0].equals(pr.sigma_tx[0]));
    CHECK(xt[1].equals(pr.sigma_tx[1]));
  }
}

TEST_CASE("prolongation is linear") {
  VectorField A = field("t", "x^2", "u*v", "exp(x)");
  VectorField B = field("1", "t", "x*v", "u");
  Expr c = P("3/2");
  ProlongedField sum = prolong2(A + B.scaled(c));
  ProlongedField pa = prolong2(A);
  ProlongedField pb = prolong2(B);
  for (int k = 0; k < 2; ++k) {
    CHECK(sum.rho_t[k].equals(pa.rho_t[k] + c * pb.rho_t[k]));
    CHECK(sum.sigma_xx[k].equals(pa.sigma_xx[k] + c * pb.sigma_xx[k]));
    CHECK(sum.sigma_tt[k].equals(pa.sigma_tt[k] + c * pb.sigma_tt[k]));
  }
}

TEST_CASE("Euler field scales homogeneous functions") {
  ProlongedField pr = prolong2(field("0", "0", "u", "v"));
  CHECK(apply_prolonged(pr, P("u*v")).equals(P("2*u*v")));
  CHECK(apply_prolonged(pr, P("u*v_xx - u_t")).equals(P("2*u*v_xx - u_t")));
}

TEST_CASE("apply_prolonged needs time coefficients for time jets") {
  ProlongedField pr = prolong2(field("t", "0", "0", "0"), false);
  CHECK_NOTHROW(apply_prolonged(pr, P("u_xx")));
  CHECK_THROWS_AS(apply_prolonged(pr, P("u_tt")), DomainError);
}

TEST_CASE("vector field text form") {
  VectorField X = VectorField::parse_text({{"xi1", "1"}, {"eta1", "u"}});
  CHECK(X.xi0.is_zero());
  CHECK(X.eta1.equals(P("u")));
  CHECK_THROWS_AS(VectorField::parse_text({{"eta1", "u_x"}}), DomainError);
}
