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

#include <map>
#include <set>
#include <unordered_map>

#include "symkit/expr/expr.hpp"

namespace symkit {

namespace {

std::optional<Coord> coord_of(Symbol s) {
  const SymbolData& d = s.data();
  if (d.kind == SymbolKind::kBase) return d.name == "t" ? Coord::kT : Coord::kX;
  if (d.kind == SymbolKind::kJet && d.t_order == 0 && d.x_order == 0) {
    return d.component == 1 ? Coord::kU : Coord::kV;
  }
  return std::nullopt;
}

// d(sym)/ds as an expression; nullopt for zero.
std::optional<Expr> symbol_derivative(Symbol sym, Symbol s) {
  if (sym == s) return Expr(1);
  switch (sym.kind()) {
    case SymbolKind::kFunction: {
      auto c = coord_of(s);
      if (!c) return std::nullopt;
      auto d = sym::function_derivative(sym, *c);
      if (!d) return std::nullopt;
      return Expr(*d);
    }
    case SymbolKind::kAtom: {
      const SymbolData& d = sym.data();
      Expr darg = diff(*d.arg, s);
      if (darg.is_zero()) return std::nullopt;
      switch (d.head) {
        case AtomHead::kExp:
          return Expr(sym) * darg;
        case AtomHead::kSin:
          return Expr(Symbol(d.partner)) * darg;
        case AtomHead::kCos:
          return -(Expr(Symbol(d.partner)) * darg);
        case AtomHead::kSqrt:
          // d sqrt(R) = R' * w / (2R)
          return darg * Expr(sym) / (Expr(2) * *d.arg);
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// Chain-rule derivative of a polynomial (may leave the polynomial ring
// through sqrt atoms).
Expr poly_derivative(const Poly& p, Symbol s) {
  std::set<Symbol> syms;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [sym, e] : m.factors()) syms.insert(sym);
  }
  Poly poly_part;
  Expr rest(0);
  for (Symbol sym : syms) {
    auto d = symbol_derivative(sym, s);
    if (!d) continue;
    Poly partial = p.partial(sym);
    if (d->is_polynomial()) {
      poly_part += partial * d->num();
    } else {
      rest += Expr::from_poly(partial) * *d;
    }
  }
  return Expr::from_poly(poly_part) + rest;
}

}  // namespace

Expr diff(const Expr& e, Symbol s) {
  Expr d = poly_derivative(e.num(), s);
  if (e.is_polynomial()) {
    d.add_assumptions(e.assumptions());
    return d;
  }
  // (N / prod f^k)' = N' / D - sum k N f' / (D f)
  std::vector<DenFactor> den = e.den();
  Expr result = d * Expr::fraction(Poly(1), den);
  for (std::size_t i = 0; i < den.size(); ++i) {
    Expr df = poly_derivative(den[i].poly, s);
    if (df.is_zero()) continue;
    std::vector<DenFactor> den_i = den;
    den_i[i].mult += 1;
    result -= Expr::fraction(e.num().scaled(den[i].mult), den_i) * df;
  }
  result.add_assumptions(e.assumptions());
  return result;
}

Expr diff(const Expr& e, Symbol s, int order) {
  Expr r = e;
  for (int i = 0; i < order; ++i) r = diff(r, s);
  return r;
}

namespace {

class Substituter {
 public:
  explicit Substituter(const SubstMap& b) : bindings_(b) {}

  Expr poly(const Poly& p) {
    bool all_poly = true;
    for (const auto& [m, c] : p.terms()) {
      for (const auto& [s, e] : m.factors()) {
        const Expr& v = value(s);
        if (!v.is_polynomial() || (e < 0 && !v.num().is_constant() &&
                                   !is_exp_monomial(v.num()))) {
          all_poly = false;
        }
      }
    }
    if (all_poly) {
      Poly out;
      for (const auto& [m, c] : p.terms()) {
        Poly term(c);
        for (const auto& [s, e] : m.factors()) {
          const Poly& v = value(s).num();
          if (e >= 0) {
            term = term * v.pow(e);
          } else {
            term = term * inverse_unit(v).pow(-e);
          }
        }
        out += term;
      }
      return Expr::from_poly(out);
    }
    Expr out(0);
    for (const auto& [m, c] : p.terms()) {
      Expr term(c);
      for (const auto& [s, e] : m.factors()) term = term * value(s).pow(e);
      out += term;
    }
    return out;
  }

 private:
  static bool is_exp_monomial(const Poly& p) {
    if (p.size() != 1) return false;
    for (const auto& [s, e] : p.leading_monomial().factors()) {
      if (!s.is_atom(AtomHead::kExp)) return false;
    }
    return true;
  }

  static Poly inverse_unit(const Poly& p) {
    if (p.is_zero()) throw DivisionByZero("substituted unit is zero");
    if (p.is_constant()) return Poly(1 / p.constant_value());
    return Poly::monomial(p.leading_monomial().pow(-1),
                          1 / p.leading_coefficient());
  }

  const Expr& value(Symbol s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    Expr v = compute(s);
    return cache_.emplace(s, std::move(v)).first->second;
  }

  Expr compute(Symbol s) {
    auto b = bindings_.find(s);
    if (b != bindings_.end()) return b->second;
    if (!s.is_atom()) return Expr(s);
    const SymbolData& d = s.data();
    bool touched = d.arg->any_symbol(
        [&](Symbol t) { return bindings_.count(t) != 0; });
    if (!touched) return Expr(s);
    Expr arg = substitute(*d.arg, bindings_);
    switch (d.head) {
      case AtomHead::kExp:
        return exp(arg);
      case AtomHead::kSin:
        return sin(arg);
      case AtomHead::kCos:
        return cos(arg);
      case AtomHead::kSqrt:
        return sqrt(arg);
    }
    return Expr(s);
  }

  const SubstMap& bindings_;
  std::unordered_map<Symbol, Expr, SymbolHash> cache_;
};

}  // namespace

Expr substitute(const Expr& e, const SubstMap& bindings) {
  if (bindings.empty()) return e;
  Substituter sub(bindings);
  Expr num = sub.poly(e.num());
  Expr result = num;
  if (!e.is_polynomial()) {
    Expr den(1);
    for (const auto& f : e.den()) den = den * sub.poly(f.poly).pow(f.mult);
    if (den.is_zero()) {
      throw DivisionByZero("substitution makes a denominator vanish: " +
                           e.str());
    }
    result = num / den;
  }
  result.add_assumptions(e.assumptions());
  return result;
}

std::map<Monomial, Expr, MonomialDescending> collect(
    const Expr& e, const std::vector<Symbol>& vars) {
  std::set<Symbol> var_set(vars.begin(), vars.end());
  auto is_var = [&](Symbol s) { return var_set.count(s) != 0; };
  for (const auto& f : e.den()) {
    if (Expr::from_poly(f.poly).any_symbol(is_var)) {
      throw DomainError("collect: denominator depends on a collected symbol");
    }
  }
  std::map<Monomial, Poly, MonomialDescending> parts;
  parts[Monomial()];
  for (const auto& [m, c] : e.num().terms()) {
    Monomial key;
    Monomial rest;
    for (const auto& [s, k] : m.factors()) {
      if (is_var(s)) {
        if (k < 0) throw DomainError("collect: negative power of " + s.name());
        key = key * Monomial(s, k);
      } else {
        if (s.is_atom() && s.data().arg->any_symbol(is_var)) {
          throw DomainError("collect: atom depends on a collected symbol: " +
                            s.name());
        }
        rest = rest * Monomial(s, k);
      }
    }
    parts[key].add_term(rest, c);
  }
  std::map<Monomial, Expr, MonomialDescending> out;
  for (auto& [k, p] : parts) {
    Expr coeff = Expr::fraction(std::move(p), e.den());
    coeff.add_assumptions(e.assumptions());
    out.emplace(k, std::move(coeff));
  }
  return out;
}

}  // namespace symkit
