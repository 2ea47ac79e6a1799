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

#include "symkit/invariance/transform.hpp"

namespace symkit {

namespace {

Expr U() { return Expr(sym::u()); }
Expr V() { return Expr(sym::v()); }

bool depends_on_t(const Expr& e) { return e.depends_on(sym::t()); }

}  // namespace

PointTransformation PointTransformation::identity() {
  PointTransformation T;
  T.id = "identity";
  return T;
}

PointTransformation PointTransformation::linear(Expr a11, Expr a12, Expr a21,
                                                Expr a22, Expr b1, Expr b2) {
  PointTransformation T;
  T.A = {{{std::move(a11), std::move(a12)}, {std::move(a21), std::move(a22)}}};
  T.b = {std::move(b1), std::move(b2)};
  return T;
}

Expr PointTransformation::det() const {
  return A[0][0] * A[1][1] - A[0][1] * A[1][0];
}

std::optional<Expr> PointTransformation::t_inverse() const {
  Expr slope = diff(t_map, sym::t());
  if (depends_on_t(slope) || slope.is_zero()) return std::nullopt;
  Expr offset = substitute(t_map, {{sym::t(), Expr(0)}});
  return (Expr(sym::t()) - offset) / slope;
}

std::array<Expr, 2> PointTransformation::forward(const Expr& u,
                                                 const Expr& v) const {
  return {A[0][0] * u + A[0][1] * v + b[0], A[1][0] * u + A[1][1] * v + b[1]};
}

std::array<Expr, 2> PointTransformation::backward() const {
  Expr d = det();
  if (d.is_zero()) throw DomainError("transformation: singular (u, v) block");
  Expr us = U() - b[0];
  Expr vs = V() - b[1];
  return {(A[1][1] * us - A[0][1] * vs) / d,
          (A[0][0] * vs - A[1][0] * us) / d};
}

PointTransformation PointTransformation::inverse() const {
  auto tinv = t_inverse();
  if (!tinv) throw DomainError("transformation: time map is not affine");
  Expr d = det();
  if (d.is_zero()) throw DomainError("transformation: singular (u, v) block");
  // Entries may depend on t; re-express them in t*.
  SubstMap in_new{{sym::t(), *tinv}};
  PointTransformation inv;
  inv.id = id.empty() ? "" : id + "^-1";
  inv.t_map = *tinv;
  inv.x_scale = Expr(1) / x_scale;
  Expr a = substitute(A[0][0] / d, in_new);
  Expr bb = substitute(A[0][1] / d, in_new);
  Expr c = substitute(A[1][0] / d, in_new);
  Expr dd = substitute(A[1][1] / d, in_new);
  inv.A = {{{dd, -bb}, {-c, a}}};
  Expr b0 = substitute(b[0], in_new);
  Expr b1 = substitute(b[1], in_new);
  inv.b = {-(dd * b0 - bb * b1), -(-c * b0 + a * b1)};
  return inv;
}

std::string PointTransformation::str() const {
  auto fw = forward(U(), V());
  return "t*=" + t_map.str() + ", x*=" + (x_scale * Expr(sym::x())).str() +
         ", u*=" + fw[0].str() + ", v*=" + fw[1].str();
}

TransformResult transform_evolution(const EvolutionSystem& sys,
                                    const PointTransformation& T) {
  if (T.x_scale.is_zero()) throw DomainError("transformation: x scale is zero");
  Expr dT = diff(T.t_map, sym::t());
  if (dT.is_zero()) throw DomainError("transformation: time map is constant");
  auto back = T.backward();
  Expr d = T.det();
  const auto& A = T.A;
  // Inverse block applied to derivatives of the starred fields.
  auto inv_apply = [&](const Expr& p, const Expr& q) -> std::array<Expr, 2> {
    return {(A[1][1] * p - A[0][1] * q) / d, (A[0][0] * q - A[1][0] * p) / d};
  };
  const Expr& k = T.x_scale;
  auto first = inv_apply(Expr(sym::u_x()), Expr(sym::v_x()));
  auto second = inv_apply(Expr(sym::u_xx()), Expr(sym::v_xx()));
  SubstMap to_new{{sym::u(), back[0]},           {sym::v(), back[1]},
                  {sym::u_x(), k * first[0]},    {sym::v_x(), k * first[1]},
                  {sym::u_xx(), k * k * second[0]},
                  {sym::v_xx(), k * k * second[1]}};
  if (!T.x_scale.equals(Expr(1))) {
    to_new.emplace(sym::x(), Expr(sym::x()) / k);
  }
  std::array<Expr, 2> F = {substitute(sys.rhs[0], to_new),
                           substitute(sys.rhs[1], to_new)};
  TransformResult res;
  for (int i = 0; i < 2; ++i) {
    Expr dA0 = diff(A[i][0], sym::t());
    Expr dA1 = diff(A[i][1], sym::t());
    Expr db = diff(T.b[i], sym::t());
    Expr rate = dA0 * back[0] + dA1 * back[1] + A[i][0] * F[0] +
                A[i][1] * F[1] + db;
    res.raw.rhs[i] = rate / dT;
    if (depends_on_t(res.raw.rhs[i])) {
      auto tinv = T.t_inverse();
      if (!tinv) {
        throw DomainError("transformed equation depends on t explicitly: " +
                          res.raw.rhs[i].str());
      }
      res.raw.rhs[i] = substitute(res.raw.rhs[i], {{sym::t(), *tinv}});
    }
  }
  std::string why;
  res.skt = fit_template(res.raw, &why);
  if (!res.skt) res.note = "not SKT template: " + why;
  return res;
}

TransformResult transform_system(const SKTSystem& sys,
                                 const PointTransformation& T) {
  TransformResult r = transform_evolution(sys.evolution(), T);
  if (r.skt) r.skt->restrictions = sys.restrictions;
  return r;
}

std::optional<SKTSystem> fit_template(const EvolutionSystem& sys,
                                      std::string* why) {
  std::vector<Symbol> vars = {sym::u(),  sym::v(),   sym::u_x(),
                              sym::v_x(), sym::u_xx(), sym::v_xx()};
  SKTSystem s;
  for (int k = 0; k < 2; ++k) {
    const Expr& F = sys.rhs[k];
    for (Symbol bad : {sym::t(), sym::x()}) {
      if (F.depends_on(bad)) {
        if (why) *why = "explicit dependence on " + bad.name();
        return std::nullopt;
      }
    }
    std::map<Monomial, Expr, MonomialDescending> parts;
    try {
      parts = collect(F, vars);
    } catch (const DomainError& e) {
      if (why) *why = e.what();
      return std::nullopt;
    }
    auto coeff = [&](std::initializer_list<Symbol> syms) {
      Monomial m;
      for (Symbol x : syms) m = m * Monomial(x);
      auto it = parts.find(m);
      return it == parts.end() ? Expr(0) : it->second;
    };
    Symbol own_xx = k == 0 ? sym::u_xx() : sym::v_xx();
    Symbol own = k == 0 ? sym::u() : sym::v();
    Symbol other = k == 0 ? sym::v() : sym::u();
    const char* names[2][6] = {{"d1", "d11", "d12", "a1", "b1", "c1"},
                               {"d2", "d22", "d21", "a2", "c2", "b2"}};
    s.set(names[k][0], coeff({own_xx}));
    s.set(names[k][1], coeff({own, own_xx}) / Expr(2));
    s.set(names[k][2], coeff({other, own_xx}));
    s.set(names[k][3], coeff({own}));
    Monomial own2 = Monomial(own, 2);
    auto it = parts.find(own2);
    s.set(names[k][4], -(it == parts.end() ? Expr(0) : it->second));
    s.set(names[k][5], -coeff({sym::u(), sym::v()}));
  }
  for (const Expr& p : s.params()) {
    if (p.any_symbol([](Symbol x) { return x.is_jet(); })) {
      if (why) *why = "coefficient depends on u or v";
      return std::nullopt;
    }
  }
  EvolutionSystem back = s.evolution();
  for (int k = 0; k < 2; ++k) {
    Expr diff_k = sys.rhs[k] - back.rhs[k];
    if (!diff_k.is_zero()) {
      if (why) {
        *why = std::string(k == 0 ? "first" : "second") +
               " equation has extra terms " + diff_k.str();
      }
      return std::nullopt;
    }
  }
  return s;
}

VectorField pushforward(const VectorField& X, const PointTransformation& T) {
  Expr t(sym::t());
  Expr dT = diff(T.t_map, sym::t());
  auto fw = T.forward(U(), V());
  Expr c[4];
  c[0] = X.xi0 * dT;
  c[1] = X.xi1 * T.x_scale;
  for (int i = 0; i < 2; ++i) c[2 + i] = apply_field(X, fw[i]);
  // Old coordinates in terms of the new ones.
  auto back = T.backward();
  SubstMap uv{{sym::u(), back[0]}, {sym::v(), back[1]}};
  SubstMap tx;
  if (!T.x_scale.equals(Expr(1))) {
    tx.emplace(sym::x(), Expr(sym::x()) / T.x_scale);
  }
  auto tinv = T.t_inverse();
  if (tinv && !tinv->equals(t)) tx.emplace(sym::t(), *tinv);
  for (auto& e : c) {
    e = substitute(substitute(e, uv), tx);
    if (!tinv && depends_on_t(e)) {
      throw DomainError("pushforward: time map not affine and field depends on t");
    }
  }
  return {c[0], c[1], c[2], c[3], X.name};
}

}  // namespace symkit
