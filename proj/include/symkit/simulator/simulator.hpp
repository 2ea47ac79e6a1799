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

// Method-of-lines solver for the conservative form of the SKT system on a
// cell-centered 1D grid: second-order central differences of the composite
// fields, explicit RK4 with dt = cfl h^2 / max diffusivity.

#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "symkit/catalog/ini.hpp"
#include "symkit/expr/eval.hpp"
#include "symkit/invariance/skt.hpp"
#include "symkit/simulator/kernels.hpp"
#include "symkit/solutions/solutions.hpp"

namespace symkit::sim {

struct Grid1D {
  double x0 = 0;
  double x1 = 1;
  int n = 64;

  Grid1D() = default;
  Grid1D(double x0, double x1, int n);  // validates
  double h() const { return (x1 - x0) / n; }
  double node(int i) const { return x0 + (i + 0.5) * h(); }
};

struct GridState {
  std::vector<double> u;
  std::vector<double> v;
  double time = 0;
  bool finite() const;
};

struct BCSpec {
  enum class Kind { kZeroNeumann, kPeriodic, kExactDirichlet };
  Kind kind = Kind::kZeroNeumann;
  // kExactDirichlet: ghost cells take the exact solution values.
  std::shared_ptr<const SolutionFamily> exact;
  NumericBindings params;

  static BCSpec neumann() { return {}; }
  static BCSpec periodic() { return {Kind::kPeriodic, nullptr, {}}; }
  static BCSpec dirichlet(const SolutionFamily& f, const NumericBindings& p);
  static Kind parse_kind(const std::string& s);
};

enum class Stencil {
  kCentral,
  kOneSided,  // right-biased, first order; negative control, scalar only
};

struct SolverConfig {
  double cfl = 0.2;
  double t_end = 0;
  int stride = 0;  // record every `stride` steps; 0 = initial and final only
  Stencil stencil = Stencil::kCentral;
  KernelChoice kernel = KernelChoice::kAuto;
};

// Parameters must evaluate to numbers under `params`.
Coeffs coefficients(const SKTSystem& sys, const NumericBindings& params = {});

// Cell averages are approximated by point values at cell centers.
GridState sample_state(const Grid1D& g, const Expr& u, const Expr& v,
                       const NumericBindings& params, double t = 0);

// du/dt, dv/dt at the state's time.
std::pair<std::vector<double>, std::vector<double>> discretize_rhs(
    const Coeffs& c, const Grid1D& g, const GridState& s, const BCSpec& bc,
    Stencil stencil = Stencil::kCentral,
    KernelChoice kernel = KernelChoice::kAuto);

struct Trajectory {
  std::vector<GridState> samples;
  long steps = 0;
  bool failed = false;
  std::string failure;  // empty on success
  long fail_step = -1;
  std::string kernel;
};

// Runs to cfg.t_end. On NaN/Inf or dt underflow (< 1e-12) the trajectory
// ends with the last valid state and `failed` set.
Trajectory run(const Coeffs& c, const Grid1D& g, const GridState& init,
               const BCSpec& bc, const SolverConfig& cfg);

// "t,x,u,v", one row per sample and cell.
void write_csv(std::ostream& out, const Grid1D& g, const Trajectory& tr);

double relative_l2_error(const Grid1D& g, const GridState& s,
                         const SolutionFamily& exact,
                         const NumericBindings& params);

struct ConvergenceReport {
  std::vector<int> ns;
  std::vector<double> errors;  // relative L2 at t_end
  std::vector<double> orders;  // log2(e(n)/e(2n)) between neighbours
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string str() const;
};

// Runs each grid size concurrently from the exact initial data.
ConvergenceReport convergence_study(const Coeffs& c, const SolutionFamily& f,
                                    const NumericBindings& params, double x0,
                                    double x1, const std::vector<int>& ns,
                                    const BCSpec::Kind bc,
                                    const SolverConfig& cfg);

// [simulate] section: grid.x0, grid.x1, grid.n, bc, cfl, t_end, init (a
// family id or "u_expr; v_expr"), stride.
struct SimulateConfig {
  Grid1D grid;
  BCSpec::Kind bc = BCSpec::Kind::kZeroNeumann;
  SolverConfig solver;
  std::string init;
};
SimulateConfig read_simulate_config(const IniSection& sec);

}  // namespace symkit::sim
