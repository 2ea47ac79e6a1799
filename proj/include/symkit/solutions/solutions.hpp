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

// Exact solution families of the product systems
//
//   u_t = [uv]_xx + s uv,  v_t = [uv]_xx + s uv   (s = -1: "3-1", s = +1: "3-2")
//
// together with residual checks, the nonlinear one-parameter groups, the
// reduction by the x-translation plus nonlinear field, and flux checks.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symkit/expr/eval.hpp"
#include "symkit/expr/expr.hpp"
#include "symkit/invariance/skt.hpp"

namespace symkit {

enum class Branch { kUpper, kLower };

struct Constraint {
  enum class Kind { kNonZero, kNonNegative };
  Expr expr;
  Kind kind = Kind::kNonZero;
  std::string str() const;
};

// Sampling box and admissible parameter values for numeric checks.
struct SampleSpec {
  double t0 = 0, t1 = 1;
  double x0 = -1, x1 = 1;
  NumericBindings params;
};

struct SolutionFamily {
  std::string id;
  std::string system_id;  // "3-1", "3-2", "1-4" or "3-8"
  Expr u;
  Expr v;
  Branch branch = Branch::kUpper;
  std::vector<Constraint> constraints;
  SampleSpec sample;

  // Exchanges u and v (and the branch label).
  SolutionFamily swapped() const;
  SolutionFamily substituted(const SubstMap& m) const;
};

// Systems referenced by the families; "1-4" keeps b symbolic.
SKTSystem builtin_system(const std::string& id);
std::vector<std::string> builtin_system_ids();

// seed-3-5, family-3-6, family-3-7, steady-3-13a/b/c, reduced-3-14a/b/c.
SolutionFamily builtin_family(const std::string& id,
                              Branch branch = Branch::kUpper);
std::vector<std::string> builtin_family_ids();

// Steady states: 'a' u = f/g, v = g; 'b' u = h, v = 0; 'c' u = 0, v = h.
// f must solve f'' = f for "3-1" and f'' = -f for "3-2".
SolutionFamily steady_family(char kind, const std::string& system_id,
                             const Expr& f, const Expr& gh);
// Arbitrary-function slots are drawn from this basis.
std::vector<Expr> steady_test_basis();

// S1, S2 with u, v and their derivatives replaced by the solution.
std::pair<Expr, Expr> residual(const SKTSystem& sys, const SolutionFamily& sol);
bool residual_is_zero(const SKTSystem& sys, const SolutionFamily& sol);

struct NumericCheck {
  double max_residual = 0;  // relative to the sum of term magnitudes
  int points = 0;
  int skipped = 0;  // guard violations
  bool pass = false;
};

struct NumericOptions {
  int points = 20;
  double tol = 1e-10;
  double den_guard = 0.1;
  double radicand_guard = 0.01;
  unsigned seed = 0;  // shifts the Halton sequence
};

// Evaluates both residuals at quasi-random (Halton) points of the sample box.
NumericCheck numeric_residual(const SKTSystem& sys, const SolutionFamily& sol,
                              const NumericOptions& opt = {});

enum class Generator { kX1, kX2 };  // exp and trig nonlinear fields

// lambda1 L1(x) + lambda2 L2(x): exp(x), exp(-x) for X1; cos, sin for X2.
Expr generator_profile(Generator g, const Expr& l1, const Expr& l2);

// The generating field itself.
VectorField generator_field(Generator g, const Expr& l1, const Expr& l2);

enum class OrbitBranch { kAuto, kUpper, kLower };

// Finite group transformation with parameter p. kAuto decides the sign of
// u - v by dense sampling (100 x 100 grid) of the family's sample box; this
// is a heuristic and throws DomainError when the sign changes.
SolutionFamily group_orbit(const SolutionFamily& sol, const Expr& p,
                           const Expr& l1, const Expr& l2, Generator g,
                           OrbitBranch branch = OrbitBranch::kAuto);

struct ReductionAnsatz {
  Expr u;
  Expr v;
  Expr phi1;  // opaque phi1(t)
  Expr phi2;
  std::vector<Expr> odes;  // reduced system, jet-free in x
  // phi2 = -phi1'/2 and phi1' = phi1^2/2 + beta, as residual expressions.
  std::pair<Expr, Expr> integrated;
};

// Supported family: X = d/dx + K(x)/(u - v) (d/du - d/dv), K a combination
// of sin, cos, exp(+-x) and powers of x.
ReductionAnsatz reduce_ansatz(const SKTSystem& sys, const VectorField& X,
                              Branch branch = Branch::kUpper);

// Substitutes concrete phi1(t), phi2(t) into an ansatz expression.
Expr with_phi(const Expr& e, const Expr& phi1, const Expr& phi2);

struct FluxReport {
  bool pass = false;
  std::vector<std::pair<std::string, Expr>> values;  // "u_x(x0)" -> value
};

// u_x, v_x at the endpoints, required to vanish identically.
FluxReport flux_check(const SolutionFamily& sol, const Expr& x0,
                      const Expr& x1);

// Maps a solution of "3-1" (sign -1) or "3-2" (sign +1) to a solution of the
// logistic-type system via t* = ln(t)/(ab), x* = x/sqrt(b), u* = a t u/d2,
// v* = a t v/d1.
SolutionFamily to_logistic(const SolutionFamily& sol, const Expr& a,
                           const Expr& b, const Expr& d1, const Expr& d2);
// u_t = d1[uv]_xx + u(ab + b1 v), v_t = d2[uv]_xx + v(ab + b2 u),
// b1 = sign b d1, b2 = sign b d2.
SKTSystem logistic_system(const Expr& a, const Expr& b, const Expr& d1,
                          const Expr& d2, int sign);
// The logistic time of an original time t > 0.
double logistic_time(double t, double a, double b);

// Solution files: a [solution] section with system=, u=, v=, branch=,
// constraints= ("expr != 0", "expr >= 0", comma separated), and optional
// params= ("alpha1=1, p=0.1"), t_range= and x_range= ("lo, hi").
SolutionFamily read_solution(const std::string& text,
                             const std::string& origin = "<solution>");
SolutionFamily read_solution_file(const std::string& path);

// "family,system,max_residual,points,verdict"
std::string csv_header();
std::string csv_row(const SolutionFamily& sol, const NumericCheck& c);

}  // namespace symkit
