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

#include "symkit/invariance/determining.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace symkit {

namespace {

constexpr std::uint8_t kAll = kDepT | kDepX | kDepU | kDepV;

bool is_function(Symbol s) { return s.kind() == SymbolKind::kFunction; }

std::vector<Symbol> functions_in(const Expr& e) {
  std::vector<Symbol> out;
  for (Symbol s : e.symbols()) {
    if (is_function(s)) out.push_back(s);
  }
  return out;
}

// f is g differentiated further (same function, multi-index >= g's).
bool is_derivative_of(Symbol f, Symbol g) {
  const SymbolData& a = f.data();
  const SymbolData& b = g.data();
  if (a.fn_base != b.fn_base || a.deps != b.deps) return false;
  for (int i = 0; i < 4; ++i) {
    if (a.multi[i] < b.multi[i]) return false;
  }
  return true;
}

std::vector<Expr> split(const SKTSystem& sys, const VectorField& X,
                        AssumptionSet& assumptions) {
  std::vector<Expr> out;
  for (const Expr& c : invariance_condition(sys.evolution(), X)) {
    for (auto& [m, coeff] : collect_jet(c)) {
      assumptions = merge_assumptions(assumptions, coeff.assumptions());
      if (!coeff.is_zero()) out.push_back(normalize_equation(coeff));
    }
  }
  return out;
}

// Single unknown f with a function-free coefficient: returns f.
std::optional<Symbol> single_unknown(const Expr& eq, Poly* coeff) {
  std::optional<Symbol> f;
  Poly c;
  for (const auto& [m, k] : eq.num().terms()) {
    std::optional<Symbol> here;
    for (const auto& [s, e] : m.factors()) {
      if (!is_function(s)) continue;
      if (here || e != 1) return std::nullopt;
      here = s;
    }
    if (!here) return std::nullopt;
    if (f && *f != *here) return std::nullopt;
    f = here;
    c.add_term(m.without(*here), k);
  }
  if (f && coeff) *coeff = c;
  return f;
}

VectorField opaque_field(std::uint8_t xi0_deps, std::uint8_t xi1_deps) {
  return {Expr(sym::function("xi0", xi0_deps)),
          Expr(sym::function("xi1", xi1_deps)),
          Expr(sym::function("eta1", kAll)), Expr(sym::function("eta2", kAll)),
          "X"};
}

bool divides_into_registered(Poly p, const std::vector<Poly>& nonzero) {
  p.make_primitive();
  bool progress = true;
  while (!p.is_constant() && progress) {
    progress = false;
    for (const Poly& f : nonzero) {
      if (f.is_constant()) continue;
      if (auto q = p.divide_exact(f)) {
        p = *q;
        progress = true;
        break;
      }
    }
  }
  return p.is_constant();
}

bool registered_ratio(const Expr& r, const std::vector<Poly>& nonzero) {
  if (r.is_zero()) return false;
  if (!divides_into_registered(r.num(), nonzero)) return false;
  for (const auto& f : r.den()) {
    if (!divides_into_registered(f.poly, nonzero)) return false;
  }
  return true;
}

}  // namespace

const Scope& determining_scope_full() {
  static const Scope s = [] {
    Scope sc = Scope::standard();
    for (const char* f : {"xi0", "xi1", "eta1", "eta2"}) {
      sc.declare_function(f, kAll);
    }
    return sc;
  }();
  return s;
}

const Scope& determining_scope_reduced() {
  static const Scope s = [] {
    Scope sc = Scope::standard();
    sc.declare_function("xi0", kDepT);
    sc.declare_function("xi1", kDepT | kDepX);
    sc.declare_function("eta1", kAll);
    sc.declare_function("eta2", kAll);
    return sc;
  }();
  return s;
}

VectorField opaque_reduced_field() {
  return opaque_field(kDepT, kDepT | kDepX);
}

Expr instantiate_unknowns(const Expr& eq, const VectorField& X) {
  static const Symbol kCoords[4] = {sym::t(), sym::x(), sym::u(), sym::v()};
  SubstMap m;
  for (Symbol f : functions_in(eq)) {
    const SymbolData& d = f.data();
    const Expr* base = nullptr;
    if (d.fn_base == "xi0") base = &X.xi0;
    if (d.fn_base == "xi1") base = &X.xi1;
    if (d.fn_base == "eta1") base = &X.eta1;
    if (d.fn_base == "eta2") base = &X.eta2;
    if (!base) continue;
    Expr v = *base;
    for (int c = 0; c < 4; ++c) v = diff(v, kCoords[c], d.multi[c]);
    m.emplace(f, v);
  }
  return substitute(eq, m);
}

Expr normalize_equation(const Expr& e) {
  Poly p = e.num();
  if (p.is_zero()) return Expr(0);
  return Expr::from_poly(p.scaled(1 / p.content()));
}

std::optional<Expr> proportional(const Expr& a, const Expr& b) {
  if (b.is_zero()) return std::nullopt;
  std::set<Symbol> fs;
  for (Symbol s : functions_in(a)) fs.insert(s);
  for (Symbol s : functions_in(b)) fs.insert(s);
  std::vector<Symbol> vars(fs.begin(), fs.end());
  auto ca = collect(a, vars);
  auto cb = collect(b, vars);
  Expr r;
  bool have = false;
  for (const auto& [m, c] : cb) {
    if (c.is_zero()) continue;
    auto it = ca.find(m);
    if (it == ca.end() || it->second.is_zero()) return std::nullopt;
    r = it->second / c;
    have = true;
    break;
  }
  if (!have) return std::nullopt;
  if (!(a - r * b).is_zero()) return std::nullopt;
  return r;
}

DeterminingSystem generate_determining(const SKTSystem& sys,
                                       const DeterminingOptions& opt) {
  DeterminingSystem ds;

  if (opt.run_stage_a) {
    std::vector<Expr> eqs =
        split(sys, opaque_field(kAll, kAll), ds.assumptions);
    std::vector<Symbol> zeroed;
    for (bool changed = true; changed;) {
      changed = false;
      for (const Expr& eq : eqs) {
        Poly c;
        auto f = single_unknown(eq, &c);
        if (!f) continue;
        bool known = std::any_of(zeroed.begin(), zeroed.end(),
                                 [&](Symbol z) { return is_derivative_of(*f, z); });
        if (known) continue;
        zeroed.push_back(*f);
        if (!c.is_constant()) {
          c.make_primitive();
          ds.assumptions = merge_assumptions(
              ds.assumptions, {{c, Assumption::Kind::kNonZero}});
        }
        changed = true;
      }
      if (!changed) break;
      std::set<Symbol> present;
      for (const Expr& eq : eqs) {
        for (Symbol s : functions_in(eq)) present.insert(s);
      }
      SubstMap kill;
      for (Symbol s : present) {
        for (Symbol z : zeroed) {
          if (is_derivative_of(s, z)) kill.emplace(s, Expr(0));
        }
      }
      std::vector<Expr> next;
      for (const Expr& eq : eqs) {
        Expr r = substitute(eq, kill);
        if (!r.is_zero()) next.push_back(normalize_equation(r));
      }
      eqs = std::move(next);
    }
    // Keep only minimal zeroed symbols.
    std::sort(zeroed.begin(), zeroed.end());
    for (Symbol z : zeroed) {
      bool minimal = std::none_of(zeroed.begin(), zeroed.end(), [&](Symbol w) {
        return w != z && is_derivative_of(z, w);
      });
      if (minimal) ds.xi_conditions.push_back(Expr(z));
    }
  }

  ds.raw = split(sys, opaque_reduced_field(), ds.assumptions);
  for (const Expr& eq : ds.raw) {
    bool merged = false;
    for (const Expr& kept : ds.equations) {
      auto r = proportional(eq, kept);
      if (!r) continue;
      if (r->is_constant() || registered_ratio(*r, opt.nonzero)) {
        merged = true;
        break;
      }
    }
    if (!merged) ds.equations.push_back(eq);
  }
  return ds;
}

std::vector<GoldenEntry> read_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot open golden file " + path);
  std::vector<GoldenEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    // LABEL STAGE: expression
    std::istringstream ls(line);
    GoldenEntry g;
    std::string stage;
    ls >> g.label >> stage;
    auto colon = line.find(':');
    if (stage.size() != 2 || stage[1] != ':' || colon == std::string::npos ||
        (stage[0] != 'A' && stage[0] != 'B')) {
      throw ParseError(path + ":" + std::to_string(lineno) +
                           ": expected 'LABEL A|B: expression'",
                       1);
    }
    g.stage = stage[0];
    const Scope& scope = g.stage == 'A' ? determining_scope_full()
                                        : determining_scope_reduced();
    g.equation = parse(line.substr(colon + 1), scope);
    out.push_back(std::move(g));
  }
  return out;
}

GoldenReport compare_golden(const DeterminingSystem& ds,
                            const std::vector<GoldenEntry>& golden) {
  GoldenReport rep;
  std::vector<bool> used(ds.equations.size(), false);
  for (const GoldenEntry& g : golden) {
    GoldenMatch m;
    m.label = g.label;
    const std::vector<Expr>& pool =
        g.stage == 'A' ? ds.xi_conditions : ds.equations;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      auto r = proportional(g.equation, pool[i]);
      if (!r) continue;
      m.generated = static_cast<int>(i);
      m.multiplier = *r;
      if (g.stage == 'B') used[i] = true;
      if (r->is_constant() && r->constant_value() < 0) {
        m.note = "opposite overall sign";
      } else if (!r->is_constant()) {
        m.note = "parameter multiple " + r->str();
      }
      break;
    }
    rep.matches.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) rep.unmatched_generated.push_back(static_cast<int>(i));
  }
  return rep;
}

bool GoldenReport::clean() const {
  for (const auto& m : matches) {
    if (m.generated < 0) return false;
  }
  return unmatched_generated.empty();
}

std::string GoldenReport::str() const {
  std::ostringstream os;
  for (const auto& m : matches) {
    os << m.label << ": ";
    if (m.generated < 0) {
      os << "MISSING";
    } else {
      os << "matched #" << m.generated << " x " << m.multiplier.str();
      if (!m.note.empty()) os << " (" << m.note << ")";
    }
    os << "\n";
  }
  for (int i : unmatched_generated) os << "extra generated #" << i << "\n";
  os << (clean() ? "golden diff clean\n" : "golden diff NOT clean\n");
  return os.str();
}

}  // namespace symkit
