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
#include <cstdio>
#include <fstream>
#include <sstream>

#include "symkit/catalog/ini.hpp"
#include "symkit/expr/parse.hpp"
#include "symkit/solutions/solutions.hpp"

namespace symkit {

namespace {

// Jet values of the solution, keyed by jet symbol.
SubstMap jet_values(const SolutionFamily& sol) {
  SubstMap m;
  const Expr* comp[2] = {&sol.u, &sol.v};
  for (int k = 0; k < 2; ++k) {
    const Expr& w = *comp[k];
    for (Symbol s : w.symbols(false)) {
      if (s.is_jet()) {
        throw DomainError("solution depends on the jet variable " + s.name());
      }
    }
    m[sym::jet(k + 1, 0, 0)] = w;
    m[sym::jet(k + 1, 1, 0)] = diff(w, sym::t());
    Expr wx = diff(w, sym::x());
    m[sym::jet(k + 1, 0, 1)] = wx;
    m[sym::jet(k + 1, 0, 2)] = diff(wx, sym::x());
  }
  return m;
}

double halton(int i, int base) {
  double f = 1;
  double r = 0;
  while (i > 0) {
    f /= base;
    r += f * (i % base);
    i /= base;
  }
  return r;
}

// Value, and sum of term magnitudes when the expression is a polynomial.
std::pair<double, double> eval_with_scale(const Expr& e,
                                          const NumericBindings& b) {
  if (!e.is_polynomial()) {
    double v = eval_numeric(e, b);
    return {v, std::fabs(v)};
  }
  double sum = 0;
  double mag = 0;
  for (const auto& [m, c] : e.num().terms()) {
    double v = eval_numeric(Expr::from_poly(Poly::monomial(m, c)), b);
    sum += v;
    mag += std::fabs(v);
  }
  return {sum, mag};
}

bool admissible(const SolutionFamily& sol, const NumericBindings& b,
                const NumericOptions& opt) {
  for (const auto& c : sol.constraints) {
    double v = eval_numeric(c.expr, b, opt.radicand_guard);
    if (c.kind == Constraint::Kind::kNonZero && std::fabs(v) < opt.den_guard) {
      return false;
    }
    if (c.kind == Constraint::Kind::kNonNegative && v < opt.radicand_guard) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::pair<Expr, Expr> residual(const SKTSystem& sys, const SolutionFamily& sol) {
  SubstMap m = jet_values(sol);
  return {substitute(sys.S(0), m), substitute(sys.S(1), m)};
}

bool residual_is_zero(const SKTSystem& sys, const SolutionFamily& sol) {
  auto [r1, r2] = residual(sys, sol);
  return r1.is_zero() && r2.is_zero();
}

NumericCheck numeric_residual(const SKTSystem& sys, const SolutionFamily& sol,
                              const NumericOptions& opt) {
  SubstMap jets = jet_values(sol);
  Expr S[2] = {sys.S(0), sys.S(1)};
  NumericCheck out;
  const int max_tries = 50 * opt.points;
  const int start = 1 + static_cast<int>(opt.seed % 100000) * 97;
  for (int i = start; out.points < opt.points && i < start + max_tries; ++i) {
    NumericBindings b = sol.sample.params;
    b[sym::t()] = sol.sample.t0 + (sol.sample.t1 - sol.sample.t0) * halton(i, 2);
    b[sym::x()] = sol.sample.x0 + (sol.sample.x1 - sol.sample.x0) * halton(i, 3);
    try {
      if (!admissible(sol, b, opt)) {
        ++out.skipped;
        continue;
      }
      NumericBindings jb = b;
      for (const auto& [s, e] : jets) {
        jb[s] = eval_numeric(e, b, opt.radicand_guard);
      }
      for (const Expr& s : S) {
        auto [v, mag] = eval_with_scale(s, jb);
        double rel = std::fabs(v) / std::max(1.0, mag);
        if (!std::isfinite(rel)) rel = INFINITY;
        out.max_residual = std::max(out.max_residual, rel);
      }
      ++out.points;
    } catch (const GuardViolation&) {
      ++out.skipped;
    }
  }
  if (out.points < opt.points) {
    throw DomainError("only " + std::to_string(out.points) +
                      " admissible sample points for " + sol.id);
  }
  out.pass = out.max_residual < opt.tol;
  return out;
}

FluxReport flux_check(const SolutionFamily& sol, const Expr& x0,
                      const Expr& x1) {
  FluxReport r;
  r.pass = true;
  Expr ux = diff(sol.u, sym::x());
  Expr vx = diff(sol.v, sym::x());
  for (const Expr* end : {&x0, &x1}) {
    SubstMap at{{sym::x(), *end}};
    for (const auto& c : sol.constraints) {
      Expr cv;
      try {
        cv = substitute(c.expr, at);
      } catch (const DivisionByZero&) {
        throw DomainError("constraint " + c.str() + " singular at x = " +
                          end->str());
      }
      if (cv.is_zero()) {
        throw DomainError("endpoint x = " + end->str() +
                          " lies on the constraint boundary " + c.str());
      }
    }
    for (const auto& [name, d] : {std::pair{"u_x", &ux}, std::pair{"v_x", &vx}}) {
      Expr val;
      try {
        val = substitute(*d, at);
      } catch (const DivisionByZero&) {
        throw DomainError(std::string(name) + " singular at x = " + end->str());
      }
      r.values.push_back({std::string(name) + "(" + end->str() + ")", val});
      if (!val.is_zero()) r.pass = false;
    }
  }
  return r;
}

SolutionFamily read_solution(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  const IniSection* sec = nullptr;
  auto sections = read_ini(in, origin);
  for (const auto& s : sections) {
    if (s.name == "solution") sec = &s;
  }
  if (sec == nullptr) throw ParseError(origin + ": no [solution] section", 0);
  SolutionFamily f;
  f.id = sec->get("id", origin);
  f.system_id = sec->get("system", "3-1");
  const std::string* u = sec->find("u");
  const std::string* v = sec->find("v");
  if (u == nullptr || v == nullptr) {
    throw ParseError(origin + ": [solution] needs u= and v=", 0);
  }
  f.u = parse(*u);
  f.v = parse(*v);
  std::string br = sec->get("branch", "upper");
  if (br == "lower") {
    f.branch = Branch::kLower;
  } else if (br != "upper") {
    throw ParseError(origin + ": branch must be upper or lower", 0);
  }
  for (const auto& item : split_list(sec->get("constraints"))) {
    Constraint c;
    std::size_t pos;
    if ((pos = item.find("!=")) != std::string::npos) {
      c.kind = Constraint::Kind::kNonZero;
    } else if ((pos = item.find(">=")) != std::string::npos) {
      c.kind = Constraint::Kind::kNonNegative;
    } else {
      throw ParseError(origin + ": constraint '" + item + "' needs != or >=", 0);
    }
    c.expr = parse(trim(item.substr(0, pos))) - parse(trim(item.substr(pos + 2)));
    f.constraints.push_back(c);
  }
  for (const auto& item : split_list(sec->get("params"))) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ParseError(origin + ": params item '" + item + "' needs '='", 0);
    }
    std::string name = trim(item.substr(0, eq));
    if (!Scope::standard().is_parameter(name)) {
      throw ParseError(origin + ": unknown parameter '" + name + "'", 0);
    }
    f.sample.params[sym::parameter(name)] =
        eval_numeric(parse(trim(item.substr(eq + 1))), {});
  }
  auto range = [&](const char* key, double& lo, double& hi) {
    auto items = split_list(sec->get(key));
    if (items.empty()) return;
    if (items.size() != 2) throw ParseError(origin + ": " + key + " needs lo, hi", 0);
    lo = eval_numeric(parse(items[0]), {});
    hi = eval_numeric(parse(items[1]), {});
  };
  range("t_range", f.sample.t0, f.sample.t1);
  range("x_range", f.sample.x0, f.sample.x1);
  return f;
}

SolutionFamily read_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot open solution file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_solution(ss.str(), path);
}

std::string csv_header() { return "family,system,max_residual,points,verdict"; }

std::string csv_row(const SolutionFamily& sol, const NumericCheck& c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", c.max_residual);
  return sol.id + "," + sol.system_id + "," + buf + "," +
         std::to_string(c.points) + "," + (c.pass ? "pass" : "fail");
}

}  // namespace symkit
