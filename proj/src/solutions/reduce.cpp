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
#include "symkit/invariance/determining.hpp"
#include "symkit/solutions/solutions.hpp"

namespace symkit {

namespace {

Symbol phi(int k, int t_order = 0) {
  return sym::function(k == 1 ? "phi1" : "phi2", kDepT, {t_order, 0, 0, 0});
}

bool mentions_x(Symbol s) {
  if (s == sym::x()) return true;
  if (!s.is_atom()) return false;
  if (s.data().arg) return s.data().arg->depends_on(sym::x());
  if (s.data().radicand) {
    return Expr::from_poly(*s.data().radicand).depends_on(sym::x());
  }
  return false;
}

// Antiderivative in x of a polynomial in sin x, cos x, exp(x) and x with
// x-free coefficients, one building block per term.
Expr antiderivative_x(const Expr& k) {
  if (!k.is_polynomial()) {
    throw DomainError("K(x) = " + k.str() + " is outside the supported family");
  }
  Expr xe(sym::x());
  Symbol sx = sym::atom(AtomHead::kSin, xe);
  Symbol cx = sym::atom(AtomHead::kCos, xe);
  Symbol ex = sym::atom(AtomHead::kExp, xe);
  Expr out(0);
  for (const auto& [m, c] : k.num().terms()) {
    Monomial rest;
    Symbol which;
    int power = 0;
    int count = 0;
    for (const auto& [s, e] : m.factors()) {
      if (s == sx || s == cx || s == ex || s == sym::x()) {
        which = s;
        power = e;
        ++count;
      } else if (mentions_x(s)) {
        count = 2;
      } else {
        rest = rest * Monomial(s, e);
      }
    }
    Expr coeff = Expr::from_poly(Poly::monomial(rest, c));
    if (count == 0) {
      out += coeff * Expr(sym::x());
    } else if (count == 1 && which == sx && power == 1) {
      out -= coeff * parse("cos(x)");
    } else if (count == 1 && which == cx && power == 1) {
      out += coeff * parse("sin(x)");
    } else if (count == 1 && which == ex) {
      out += coeff * Expr(ex).pow(power) / Expr(power);
    } else if (count == 1 && which == sym::x()) {
      out += coeff * Expr(sym::x()).pow(power + 1) / Expr(power + 1);
    } else {
      throw DomainError("K(x) = " + k.str() + " is outside the supported family");
    }
  }
  return out;
}

// Divides out the largest monomial in the non-function symbols that
// divides every term (parameter factors such as lambda1*lambda2, assumed
// nonzero).
Expr strip_parameter_monomial(const Expr& e) {
  Poly p = e.num();
  Monomial shift;
  for (Symbol s : e.symbols(false)) {
    if (s.kind() == SymbolKind::kFunction) continue;
    int lo = p.min_degree(s);
    if (lo > 0) shift = shift * Monomial(s, -lo);
  }
  if (!shift.empty()) p = p.times(shift);
  return Expr::from_poly(p);
}

}  // namespace

ReductionAnsatz reduce_ansatz(const SKTSystem& sys, const VectorField& X,
                              Branch branch) {
  Expr w = parse("u - v");
  if (!X.xi0.is_zero() || !X.xi1.equals(Expr(1)) ||
      !(X.eta1 + X.eta2).is_zero()) {
    throw DomainError("operator is not of the form d/dx + K(x)/(u-v)(d/du - d/dv)");
  }
  Expr k = (X.eta1 * w).without_assumptions();
  for (Symbol s : {sym::t(), sym::u(), sym::v()}) {
    if (k.depends_on(s)) {
      throw DomainError("K = " + k.str() + " must depend on x only");
    }
  }
  Expr F = antiderivative_x(k);

  ReductionAnsatz R;
  R.phi1 = Expr(phi(1));
  R.phi2 = Expr(phi(2));
  Expr root = sqrt(R.phi1.pow(2) + Expr(4) * R.phi2 + Expr(4) * F);
  Expr s = branch == Branch::kUpper ? Expr(1) : Expr(-1);
  R.u = (R.phi1 + s * root) / Expr(2);
  R.v = (R.phi1 - s * root) / Expr(2);

  SolutionFamily f;
  f.u = R.u;
  f.v = R.v;
  auto [r1, r2] = residual(sys, f);

  // Every coefficient of the numerators in x-dependent monomials (sqrt
  // atom included) must vanish.
  std::vector<Symbol> vars;
  for (const Expr* r : {&r1, &r2}) {
    for (Symbol sy : r->symbols(false)) {
      if (mentions_x(sy) || sy.is_atom(AtomHead::kSqrt)) vars.push_back(sy);
    }
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::vector<Expr> cand;
  for (const Expr& r : {r1 + r2, r1 - r2}) {
    for (const auto& [m, c] : collect(Expr::from_poly(r.num()), vars)) {
      if (c.is_zero()) continue;
      Expr eq = strip_parameter_monomial(normalize_equation(c));
      if (eq.num().leading_coefficient() < 0) eq = -eq;
      cand.push_back(eq);
    }
  }
  // Smallest first; a candidate in the ideal of one accepted equation (exact
  // polynomial multiple) adds nothing.
  std::stable_sort(cand.begin(), cand.end(), [](const Expr& a, const Expr& b) {
    return a.num().size() < b.num().size();
  });
  for (const Expr& eq : cand) {
    bool redundant = false;
    for (const Expr& have : R.odes) {
      if (eq.num().divide_exact(have.num())) redundant = true;
    }
    if (!redundant) R.odes.push_back(eq);
  }
  for (const Expr& e : R.odes) {
    if (e.any_symbol(mentions_x)) {
      throw DomainError("reduction left x-dependence in " + e.str());
    }
  }
  Expr p1t(phi(1, 1));
  R.integrated = {R.phi2 + p1t / Expr(2),
                  p1t - R.phi1.pow(2) / Expr(2) - parse("beta")};
  return R;
}

Expr with_phi(const Expr& e, const Expr& phi1, const Expr& phi2) {
  SubstMap m;
  const Expr* f[2] = {&phi1, &phi2};
  for (int k = 0; k < 2; ++k) {
    Expr d = *f[k];
    for (int o = 0; o <= 2; ++o) {
      m[phi(k + 1, o)] = d;
      d = diff(d, sym::t());
    }
  }
  return substitute(e, m);
}

}  // namespace symkit
