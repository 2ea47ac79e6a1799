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

#include "symkit/simulator/simulator.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

#include "symkit/expr/parse.hpp"

namespace symkit::sim {

namespace {

constexpr int kGhost = 2;
constexpr double kMinDt = 1e-12;

// Solution values at x for the exact-dirichlet ghosts.
double exact_at(const Expr& e, const NumericBindings& params, double t,
                double x) {
  NumericBindings b = params;
  b[sym::t()] = t;
  b[sym::x()] = x;
  return eval_numeric(e, b);
}

class Stepper {
 public:
  Stepper(const Coeffs& c, const Grid1D& g, const BCSpec& bc, Stencil st,
          const KernelOps& ops)
      : c_(c), g_(g), bc_(bc), stencil_(st), ops_(ops), n_(g.n) {
    int m = n_ + 2 * kGhost;
    eu_.assign(m, 0);
    ev_.assign(m, 0);
    P_.assign(m, 0);
    Q_.assign(m, 0);
    inv_h2_ = 1.0 / (g.h() * g.h());
  }

  // (du, dv) for interior (u, v) at time t.
  void eval(const double* u, const double* v, double t, double* du,
            double* dv) {
    std::copy(u, u + n_, eu_.begin() + kGhost);
    std::copy(v, v + n_, ev_.begin() + kGhost);
    fill_ghosts(eu_, t, 0);
    fill_ghosts(ev_, t, 1);
    int m = n_ + 2 * kGhost;
    ops_.composite(c_, eu_.data(), ev_.data(), m, P_.data(), Q_.data());
    if (stencil_ == Stencil::kCentral) {
      ops_.rhs(c_, eu_.data() + kGhost, ev_.data() + kGhost, P_.data() + kGhost,
               Q_.data() + kGhost, n_, inv_h2_, du, dv);
      return;
    }
    // Central second difference averaged with its right neighbour: the
    // value at x_i + h/2, first order at x_i.
    for (int i = 0; i < n_; ++i) {
      const double* P = P_.data() + kGhost + i;
      const double* Q = Q_.data() + kGhost + i;
      double ui = u[i];
      double vi = v[i];
      double lp = ((P[-1] - 2.0 * P[0]) + P[1]) + ((P[0] - 2.0 * P[1]) + P[2]);
      double lq = ((Q[-1] - 2.0 * Q[0]) + Q[1]) + ((Q[0] - 2.0 * Q[1]) + Q[2]);
      du[i] = 0.5 * lp * inv_h2_ + ui * ((c_.a1 - c_.b1 * ui) - c_.c1 * vi);
      dv[i] = 0.5 * lq * inv_h2_ + vi * ((c_.a2 - c_.b2 * ui) - c_.c2 * vi);
    }
  }

 private:
  void fill_ghosts(std::vector<double>& e, double t, int comp) {
    const int lo = kGhost;
    const int hi = kGhost + n_ - 1;
    switch (bc_.kind) {
      case BCSpec::Kind::kZeroNeumann:
        for (int k = 1; k <= kGhost; ++k) {
          e[lo - k] = e[lo + k - 1];
          e[hi + k] = e[hi - k + 1];
        }
        break;
      case BCSpec::Kind::kPeriodic:
        for (int k = 1; k <= kGhost; ++k) {
          e[lo - k] = e[hi - k + 1];
          e[hi + k] = e[lo + k - 1];
        }
        break;
      case BCSpec::Kind::kExactDirichlet: {
        const Expr& w = comp == 0 ? bc_.exact->u : bc_.exact->v;
        double h = g_.h();
        for (int k = 1; k <= kGhost; ++k) {
          e[lo - k] = exact_at(w, bc_.params, t, g_.x0 - (k - 0.5) * h);
          e[hi + k] = exact_at(w, bc_.params, t, g_.x1 + (k - 0.5) * h);
        }
        break;
      }
    }
  }

  Coeffs c_;
  Grid1D g_;
  const BCSpec& bc_;
  Stencil stencil_;
  const KernelOps& ops_;
  int n_;
  double inv_h2_;
  std::vector<double> eu_, ev_, P_, Q_;
};

const KernelOps& kernels_for(Stencil st, KernelChoice k) {
  // The one-sided control only exists as a scalar loop.
  return st == Stencil::kOneSided ? scalar_kernels() : select_kernels(k);
}

}  // namespace

Grid1D::Grid1D(double a, double b, int cells) : x0(a), x1(b), n(cells) {
  if (!(x1 > x0)) throw DomainError("grid needs x1 > x0");
  if (n < 8) throw DomainError("grid needs at least 8 cells");
}

bool GridState::finite() const {
  for (double a : u) {
    if (!std::isfinite(a)) return false;
  }
  for (double a : v) {
    if (!std::isfinite(a)) return false;
  }
  return true;
}

BCSpec BCSpec::dirichlet(const SolutionFamily& f, const NumericBindings& p) {
  return {Kind::kExactDirichlet, std::make_shared<const SolutionFamily>(f), p};
}

BCSpec::Kind BCSpec::parse_kind(const std::string& s) {
  if (s == "zero-neumann" || s == "neumann") return Kind::kZeroNeumann;
  if (s == "periodic") return Kind::kPeriodic;
  if (s == "exact-dirichlet" || s == "dirichlet") return Kind::kExactDirichlet;
  throw DomainError("unknown boundary condition '" + s + "'");
}

Coeffs coefficients(const SKTSystem& sys, const NumericBindings& params) {
  double v[12];
  for (int i = 0; i < 12; ++i) {
    try {
      v[i] = eval_numeric(sys.params()[i], params);
    } catch (const EvalError& e) {
      throw DomainError(std::string("parameter ") + SKTSystem::parameter_names()[i] +
                        " has no numeric value: " + e.what());
    }
  }
  Coeffs c;
  c.d1 = v[0];
  c.d2 = v[1];
  c.d11 = v[2];
  c.d12 = v[3];
  c.d21 = v[4];
  c.d22 = v[5];
  c.a1 = v[6];
  c.a2 = v[7];
  c.b1 = v[8];
  c.b2 = v[9];
  c.c1 = v[10];
  c.c2 = v[11];
  return c;
}

GridState sample_state(const Grid1D& g, const Expr& u, const Expr& v,
                       const NumericBindings& params, double t) {
  GridState s;
  s.time = t;
  s.u.resize(g.n);
  s.v.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    s.u[i] = exact_at(u, params, t, g.node(i));
    s.v[i] = exact_at(v, params, t, g.node(i));
  }
  return s;
}

std::pair<std::vector<double>, std::vector<double>> discretize_rhs(
    const Coeffs& c, const Grid1D& g, const GridState& s, const BCSpec& bc,
    Stencil stencil, KernelChoice kernel) {
  Stepper st(c, g, bc, stencil, kernels_for(stencil, kernel));
  std::vector<double> du(g.n), dv(g.n);
  st.eval(s.u.data(), s.v.data(), s.time, du.data(), dv.data());
  return {du, dv};
}

Trajectory run(const Coeffs& c, const Grid1D& g, const GridState& init,
               const BCSpec& bc, const SolverConfig& cfg) {
  if (static_cast<int>(init.u.size()) != g.n ||
      static_cast<int>(init.v.size()) != g.n) {
    throw DomainError("initial state does not match the grid");
  }
  if (!init.finite()) throw DomainError("initial state is not finite");
  if (!(cfg.cfl > 0 && cfg.cfl <= 1)) throw DomainError("cfl must lie in (0, 1]");
  if (bc.kind == BCSpec::Kind::kExactDirichlet && !bc.exact) {
    throw DomainError("exact-dirichlet needs an attached solution");
  }
  const KernelOps& ops = kernels_for(cfg.stencil, cfg.kernel);
  Stepper st(c, g, bc, cfg.stencil, ops);
  Trajectory tr;
  tr.kernel = ops.name;
  tr.samples.push_back(init);

  const int n = g.n;
  const double h2 = g.h() * g.h();
  GridState y = init;
  std::vector<double> k1u(n), k1v(n), k2u(n), k2v(n), k3u(n), k3v(n), k4u(n),
      k4v(n), tu(n), tv(n);
  double t = init.time;
  while (t < cfg.t_end) {
    double md = ops.max_diffusivity(c, y.u.data(), y.v.data(), n);
    // Pure reaction: no diffusive limit, step on the h^2 scale anyway.
    double dt = md > 0 ? cfg.cfl * h2 / md : cfg.cfl * h2;
    if (!(dt >= kMinDt)) {
      tr.failed = true;
      tr.failure = "dt underflow";
      tr.fail_step = tr.steps;
      break;
    }
    bool last = cfg.t_end - t <= dt;
    if (last) dt = cfg.t_end - t;

    st.eval(y.u.data(), y.v.data(), t, k1u.data(), k1v.data());
    ops.axpy(y.u.data(), 0.5 * dt, k1u.data(), tu.data(), n);
    ops.axpy(y.v.data(), 0.5 * dt, k1v.data(), tv.data(), n);
    st.eval(tu.data(), tv.data(), t + 0.5 * dt, k2u.data(), k2v.data());
    ops.axpy(y.u.data(), 0.5 * dt, k2u.data(), tu.data(), n);
    ops.axpy(y.v.data(), 0.5 * dt, k2v.data(), tv.data(), n);
    st.eval(tu.data(), tv.data(), t + 0.5 * dt, k3u.data(), k3v.data());
    ops.axpy(y.u.data(), dt, k3u.data(), tu.data(), n);
    ops.axpy(y.v.data(), dt, k3v.data(), tv.data(), n);
    st.eval(tu.data(), tv.data(), t + dt, k4u.data(), k4v.data());
    GridState next;
    next.u.resize(n);
    next.v.resize(n);
    ops.rk4_combine(y.u.data(), k1u.data(), k2u.data(), k3u.data(), k4u.data(),
                    dt / 6.0, next.u.data(), n);
    ops.rk4_combine(y.v.data(), k1v.data(), k2v.data(), k3v.data(), k4v.data(),
                    dt / 6.0, next.v.data(), n);
    next.time = last ? cfg.t_end : t + dt;
    if (!next.finite()) {
      tr.failed = true;
      tr.failure = "non-finite state";
      tr.fail_step = tr.steps;
      break;
    }
    y = std::move(next);
    t = y.time;
    ++tr.steps;
    if (cfg.stride > 0 && tr.steps % cfg.stride == 0 && t < cfg.t_end) {
      tr.samples.push_back(y);
    }
  }
  if (tr.samples.back().time != y.time || tr.samples.size() == 1) {
    if (y.time != init.time) tr.samples.push_back(y);
  }
  return tr;
}

void write_csv(std::ostream& out, const Grid1D& g, const Trajectory& tr) {
  out << "t,x,u,v\n";
  char buf[128];
  for (const auto& s : tr.samples) {
    for (int i = 0; i < g.n; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.time,
                    g.node(i), s.u[i], s.v[i]);
      out << buf;
    }
  }
}

double relative_l2_error(const Grid1D& g, const GridState& s,
                         const SolutionFamily& exact,
                         const NumericBindings& params) {
  GridState e = sample_state(g, exact.u, exact.v, params, s.time);
  double num = 0;
  double den = 0;
  for (int i = 0; i < g.n; ++i) {
    double du = s.u[i] - e.u[i];
    double dv = s.v[i] - e.v[i];
    num += du * du + dv * dv;
    den += e.u[i] * e.u[i] + e.v[i] * e.v[i];
  }
  return std::sqrt(num / den);
}

std::string ConvergenceReport::str() const {
  std::ostringstream o;
  char buf[128];
  for (std::size_t i = 0; i < ns.size(); ++i) {
    std::snprintf(buf, sizeof buf, "n=%-5d error=%.6e", ns[i], errors[i]);
    o << buf;
    if (i > 0) {
      std::snprintf(buf, sizeof buf, "  order=%.4f", orders[i - 1]);
      o << buf;
    }
    o << "\n";
  }
  for (const auto& f : failures) o << "failure: " << f << "\n";
  return o.str();
}

ConvergenceReport convergence_study(const Coeffs& c, const SolutionFamily& f,
                                    const NumericBindings& params, double x0,
                                    double x1, const std::vector<int>& ns,
                                    const BCSpec::Kind bc,
                                    const SolverConfig& cfg) {
  BCSpec spec;
  spec.kind = bc;
  if (bc == BCSpec::Kind::kExactDirichlet) spec = BCSpec::dirichlet(f, params);
  std::vector<std::future<std::pair<double, std::string>>> jobs;
  for (int n : ns) {
    jobs.push_back(std::async(std::launch::async, [&, n] {
      Grid1D g(x0, x1, n);
      GridState init = sample_state(g, f.u, f.v, params, 0.0);
      Trajectory tr = run(c, g, init, spec, cfg);
      if (tr.failed) {
        return std::pair<double, std::string>(
            NAN, "n=" + std::to_string(n) + ": " + tr.failure);
      }
      return std::pair<double, std::string>(
          relative_l2_error(g, tr.samples.back(), f, params), "");
    }));
  }
  ConvergenceReport r;
  r.ns = ns;
  for (auto& j : jobs) {
    auto [e, fail] = j.get();
    r.errors.push_back(e);
    if (!fail.empty()) r.failures.push_back(fail);
  }
  for (std::size_t i = 1; i < ns.size(); ++i) {
    double ratio = static_cast<double>(ns[i]) / ns[i - 1];
    r.orders.push_back(std::log(r.errors[i - 1] / r.errors[i]) / std::log(ratio));
  }
  return r;
}

SimulateConfig read_simulate_config(const IniSection& sec) {
  auto num = [&](const char* key, double fallback) {
    const std::string* s = sec.find(key);
    if (s == nullptr) return fallback;
    return eval_numeric(parse(*s), {});
  };
  SimulateConfig c;
  c.grid = Grid1D(num("grid.x0", 0), num("grid.x1", 1),
                  static_cast<int>(num("grid.n", 64)));
  c.bc = BCSpec::parse_kind(sec.get("bc", "zero-neumann"));
  c.solver.cfl = num("cfl", 0.2);
  c.solver.t_end = num("t_end", 0);
  c.solver.stride = static_cast<int>(num("stride", 0));
  c.init = sec.get("init");
  if (c.init.empty()) throw DomainError("[simulate] needs init=");
  return c;
}

}  // namespace symkit::sim
