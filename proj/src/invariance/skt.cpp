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

#include "symkit/invariance/skt.hpp"

#include <algorithm>

namespace symkit {

namespace {

SubstMap uv_swap_map() {
  return {{sym::u(), Expr(sym::v())},       {sym::v(), Expr(sym::u())},
          {sym::u_t(), Expr(sym::v_t())},   {sym::v_t(), Expr(sym::u_t())},
          {sym::u_x(), Expr(sym::v_x())},   {sym::v_x(), Expr(sym::u_x())},
          {sym::u_xx(), Expr(sym::v_xx())}, {sym::v_xx(), Expr(sym::u_xx())},
          {sym::u_tx(), Expr(sym::v_tx())}, {sym::v_tx(), Expr(sym::u_tx())},
          {sym::u_tt(), Expr(sym::v_tt())}, {sym::v_tt(), Expr(sym::u_tt())}};
}

int index_of(const std::string& name) {
  const auto& names = SKTSystem::parameter_names();
  for (int i = 0; i < 12; ++i) {
    if (name == names[i]) return i;
  }
  throw NotFound("unknown system parameter '" + name + "'");
}

}  // namespace

Expr EvolutionSystem::S(int k) const {
  return -Expr(k == 0 ? sym::u_t() : sym::v_t()) + rhs[k];
}

EvolutionSystem EvolutionSystem::swapped() const {
  SubstMap m = uv_swap_map();
  return {{substitute(rhs[1], m), substitute(rhs[0], m)}};
}

const std::array<const char*, 12>& SKTSystem::parameter_names() {
  static const std::array<const char*, 12> kNames = {
      "d1", "d2", "d11", "d12", "d21", "d22",
      "a1", "a2", "b1",  "b2",  "c1",  "c2"};
  return kNames;
}

SKTSystem::SKTSystem() {
  for (auto& p : p_) p = Expr(0);
}

SKTSystem SKTSystem::from_map(const std::map<std::string, Expr>& params) {
  SKTSystem s;
  for (const auto& [k, v] : params) s.set(k, v);
  return s;
}

SKTSystem SKTSystem::generic() {
  SKTSystem s;
  for (int i = 0; i < 12; ++i) {
    s.p_[i] = Expr(sym::parameter(parameter_names()[i]));
  }
  return s;
}

const Expr& SKTSystem::get(const std::string& name) const {
  return p_[index_of(name)];
}

void SKTSystem::set(const std::string& name, Expr value) {
  p_[index_of(name)] = std::move(value);
}

Expr SKTSystem::rhs(int k) const {
  Expr u(sym::u()), v(sym::v());
  Expr ux(sym::u_x()), vx(sym::v_x());
  Expr uxx(sym::u_xx()), vxx(sym::v_xx());
  const Expr& d1 = get("d1");
  const Expr& d2 = get("d2");
  const Expr& d11 = get("d11");
  const Expr& d12 = get("d12");
  const Expr& d21 = get("d21");
  const Expr& d22 = get("d22");
  if (k == 0) {
    return d1 * uxx + Expr(2) * d11 * u * uxx + d12 * v * uxx +
           d12 * u * vxx + Expr(2) * d11 * ux * ux + Expr(2) * d12 * ux * vx +
           u * (get("a1") - get("b1") * u - get("c1") * v);
  }
  return d2 * vxx + Expr(2) * d22 * v * vxx + d21 * u * vxx + d21 * v * uxx +
         Expr(2) * d22 * vx * vx + Expr(2) * d21 * ux * vx +
         v * (get("a2") - get("b2") * u - get("c2") * v);
}

EvolutionSystem SKTSystem::evolution() const { return {{rhs(0), rhs(1)}}; }

SKTSystem SKTSystem::swapped() const {
  SKTSystem s;
  auto mv = [&](const char* to, const char* from) { s.set(to, get(from)); };
  mv("d1", "d2");
  mv("d2", "d1");
  mv("d11", "d22");
  mv("d22", "d11");
  mv("d12", "d21");
  mv("d21", "d12");
  mv("a1", "a2");
  mv("a2", "a1");
  mv("b1", "c2");
  mv("c2", "b1");
  mv("c1", "b2");
  mv("b2", "c1");
  s.restrictions = restrictions;
  return s;
}

SKTSystem SKTSystem::substituted(const SubstMap& m) const {
  SKTSystem s = *this;
  for (auto& p : s.p_) p = substitute(p, m);
  return s;
}

bool SKTSystem::equals(const SKTSystem& o) const {
  for (int i = 0; i < 12; ++i) {
    if (!p_[i].equals(o.p_[i])) return false;
  }
  return true;
}

std::string SKTSystem::str() const {
  std::string out;
  for (int i = 0; i < 12; ++i) {
    if (i) out += ", ";
    out += std::string(parameter_names()[i]) + "=" + p_[i].str();
  }
  return out;
}

Expr manifold_restrict(const Expr& e, const EvolutionSystem& sys) {
  SubstMap m;
  if (e.depends_on(sym::u_t())) m.emplace(sym::u_t(), sys.rhs[0]);
  if (e.depends_on(sym::v_t())) m.emplace(sym::v_t(), sys.rhs[1]);
  return substitute(e, m);
}

std::array<Expr, 2> invariance_condition(const EvolutionSystem& sys,
                                         const VectorField& X) {
  ProlongedField P = prolong2(X, /*time_second=*/false);
  std::array<Expr, 2> out;
  for (int k = 0; k < 2; ++k) {
    out[k] = manifold_restrict(apply_prolonged(P, sys.S(k)), sys);
  }
  return out;
}

Verdict check_invariance(const EvolutionSystem& sys, const VectorField& X) {
  Verdict v;
  auto cond = invariance_condition(sys, X);
  for (int k = 0; k < 2; ++k) {
    v.assumptions = merge_assumptions(v.assumptions, cond[k].assumptions());
    for (auto& [m, c] : collect_jet(cond[k])) {
      v.assumptions = merge_assumptions(v.assumptions, c.assumptions());
      if (!c.is_zero()) v.witnesses.push_back({k, m, c});
    }
  }
  v.invariant = v.witnesses.empty();
  return v;
}

VectorField swap_uv(const VectorField& X) {
  SubstMap m = uv_swap_map();
  return {substitute(X.xi0, m), substitute(X.xi1, m), substitute(X.eta2, m),
          substitute(X.eta1, m), X.name};
}

}  // namespace symkit
