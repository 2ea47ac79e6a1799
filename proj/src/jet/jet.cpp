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

#include "symkit/jet/jet.hpp"

#include <set>

namespace symkit {

bool VectorField::is_zero() const {
  return xi0.is_zero() && xi1.is_zero() && eta1.is_zero() && eta2.is_zero();
}

bool VectorField::equals(const VectorField& o) const {
  return xi0.equals(o.xi0) && xi1.equals(o.xi1) && eta1.equals(o.eta1) &&
         eta2.equals(o.eta2);
}

std::string VectorField::str() const {
  return "xi0=" + xi0.str() + "\nxi1=" + xi1.str() + "\neta1=" + eta1.str() +
         "\neta2=" + eta2.str() + "\n";
}

VectorField VectorField::parse_text(
    const std::map<std::string, std::string>& kv, const Scope& scope) {
  VectorField X;
  auto get = [&](const char* key) {
    auto it = kv.find(key);
    return it == kv.end() ? Expr(0) : parse(it->second, scope);
  };
  X.xi0 = get("xi0");
  X.xi1 = get("xi1");
  X.eta1 = get("eta1");
  X.eta2 = get("eta2");
  for (const Expr* c : X.coeffs()) {
    if (c->any_symbol([](Symbol s) { return s.is_jet() && s.jet_order() > 0; })) {
      throw DomainError("vector field coefficient contains a derivative jet");
    }
  }
  return X;
}

VectorField VectorField::scaled(const Expr& c) const {
  return {xi0 * c, xi1 * c, eta1 * c, eta2 * c, name};
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  return {a.xi0 + b.xi0, a.xi1 + b.xi1, a.eta1 + b.eta1, a.eta2 + b.eta2, ""};
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  return {a.xi0 - b.xi0, a.xi1 - b.xi1, a.eta1 - b.eta1, a.eta2 - b.eta2, ""};
}

std::array<Symbol, 4> base_coordinates() {
  return {sym::t(), sym::x(), sym::u(), sym::v()};
}

Expr apply_field(const VectorField& X, const Expr& f) {
  auto coords = base_coordinates();
  auto cs = X.coeffs();
  Expr out(0);
  for (int i = 0; i < 4; ++i) {
    if (cs[i]->is_zero()) continue;
    Expr d = diff(f, coords[i]);
    if (!d.is_zero()) out += *cs[i] * d;
  }
  return out;
}

const std::vector<Symbol>& derivative_jets() {
  static const std::vector<Symbol> kJets = {
      sym::u_t(),  sym::v_t(),  sym::u_x(),  sym::v_x(),
      sym::u_xx(), sym::v_xx(), sym::u_tx(), sym::v_tx(),
      sym::u_tt(), sym::v_tt()};
  return kJets;
}

Expr total_derivative(const Expr& e, Direction d) {
  bool t = d == Direction::kT;
  Expr out = diff(e, t ? sym::t() : sym::x());
  // u and v enter opaque functions implicitly.
  std::set<Symbol> jets = {sym::u(), sym::v()};
  for (Symbol s : e.symbols()) {
    if (s.is_jet()) jets.insert(s);
  }
  for (Symbol s : jets) {
    const SymbolData& j = s.data();
    if (j.t_order + j.x_order >= 2) {
      throw OrderOverflow("total derivative of " + s.name() +
                          " leaves the second-order jet space");
    }
    Symbol next = sym::jet(j.component, j.t_order + (t ? 1 : 0),
                           j.x_order + (t ? 0 : 1));
    Expr ds = diff(e, s);
    if (!ds.is_zero()) out += ds * Expr(next);
  }
  return out;
}

namespace {

Symbol jet_of(int k, int nt, int nx) { return sym::jet(k + 1, nt, nx); }

}  // namespace

ProlongedField prolong2(const VectorField& X, bool time_second) {
  ProlongedField P;
  P.base = X;
  P.has_time_second = time_second;
  Expr dt_xi0 = total_derivative(X.xi0, Direction::kT);
  Expr dx_xi0 = total_derivative(X.xi0, Direction::kX);
  Expr dt_xi1 = total_derivative(X.xi1, Direction::kT);
  Expr dx_xi1 = total_derivative(X.xi1, Direction::kX);
  const Expr* eta[2] = {&X.eta1, &X.eta2};
  for (int k = 0; k < 2; ++k) {
    Expr ut(jet_of(k, 1, 0));
    Expr ux(jet_of(k, 0, 1));
    P.rho_t[k] = total_derivative(*eta[k], Direction::kT) - ut * dt_xi0 -
                 ux * dt_xi1;
    P.rho_x[k] = total_derivative(*eta[k], Direction::kX) - ut * dx_xi0 -
                 ux * dx_xi1;
    Expr utt(jet_of(k, 2, 0));
    Expr utx(jet_of(k, 1, 1));
    Expr uxx(jet_of(k, 0, 2));
    P.sigma_xx[k] = total_derivative(P.rho_x[k], Direction::kX) -
                    utx * dx_xi0 - uxx * dx_xi1;
    if (time_second) {
      P.sigma_tt[k] = total_derivative(P.rho_t[k], Direction::kT) -
                      utt * dt_xi0 - utx * dt_xi1;
      P.sigma_tx[k] = total_derivative(P.rho_t[k], Direction::kX) -
                      utt * dx_xi0 - utx * dx_xi1;
    }
  }
  return P;
}

std::array<Expr, 2> sigma_xt(const ProlongedField& P) {
  const VectorField& X = P.base;
  Expr dt_xi0 = total_derivative(X.xi0, Direction::kT);
  Expr dt_xi1 = total_derivative(X.xi1, Direction::kT);
  std::array<Expr, 2> out;
  for (int k = 0; k < 2; ++k) {
    out[k] = total_derivative(P.rho_x[k], Direction::kT) -
             Expr(jet_of(k, 1, 1)) * dt_xi0 - Expr(jet_of(k, 0, 2)) * dt_xi1;
  }
  return out;
}

Expr apply_prolonged(const ProlongedField& P, const Expr& e) {
  Expr out = apply_field(P.base, e);
  auto add = [&](Symbol s, const Expr& coeff) {
    if (coeff.is_zero()) return;
    Expr d = diff(e, s);
    if (!d.is_zero()) out += coeff * d;
  };
  for (int k = 0; k < 2; ++k) {
    add(jet_of(k, 1, 0), P.rho_t[k]);
    add(jet_of(k, 0, 1), P.rho_x[k]);
    add(jet_of(k, 0, 2), P.sigma_xx[k]);
    bool needs_time = e.depends_on(jet_of(k, 2, 0)) ||
                      e.depends_on(jet_of(k, 1, 1));
    if (needs_time) {
      if (!P.has_time_second) {
        throw DomainError("prolongation computed without time derivatives");
      }
      add(jet_of(k, 2, 0), P.sigma_tt[k]);
      add(jet_of(k, 1, 1), P.sigma_tx[k]);
    }
  }
  return out;
}

std::map<Monomial, Expr, MonomialDescending> collect_jet(const Expr& e) {
  return collect(e, derivative_jets());
}

}  // namespace symkit
