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

#include "symkit/expr/expr.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace symkit {

namespace {

const AssumptionSet& empty_assumptions() {
  static const AssumptionSet kEmpty;
  return kEmpty;
}

void insert_assumption(AssumptionSet& set, Assumption a) {
  auto it = std::lower_bound(set.begin(), set.end(), a);
  if (it == set.end() || !(*it == a)) set.insert(it, std::move(a));
}

// Greatest monomial dividing every term. Exp atoms may contribute negative
// exponents; every other symbol contributes its minimum non-negative degree.
Monomial monomial_content(const Poly& p) {
  std::set<Symbol> syms;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [s, e] : m.factors()) syms.insert(s);
  }
  Monomial g;
  for (Symbol s : syms) {
    int lo = p.min_degree(s);
    if (lo != 0) g = g * Monomial(s, lo);
  }
  return g;
}

std::optional<Symbol> largest_sqrt_atom(const Poly& p) {
  std::optional<Symbol> best;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [s, e] : m.factors()) {
      if (s.is_atom(AtomHead::kSqrt) && (!best || *best < s)) best = s;
    }
  }
  return best;
}

// Degree precheck for trial division.
bool may_divide(const Poly& num, const Poly& d) {
  for (const auto& [s, e] : d.leading_monomial().factors()) {
    if (s.is_atom(AtomHead::kExp)) continue;
    if (num.max_degree(s) < d.max_degree(s)) return false;
  }
  return true;
}

void sort_merge(std::vector<DenFactor>& den) {
  std::sort(den.begin(), den.end(), [](const DenFactor& a, const DenFactor& b) {
    return Poly::compare(a.poly, b.poly) < 0;
  });
  std::vector<DenFactor> out;
  for (auto& f : den) {
    if (!out.empty() && out.back().poly == f.poly) {
      out.back().mult += f.mult;
    } else {
      out.push_back(std::move(f));
    }
  }
  den.swap(out);
}

}  // namespace

class ExprBuilder {
 public:
  // Brings den factors to canonical form (rationalizing sqrt atoms, moving
  // exp units and rational content into the numerator), then cancels.
  static Expr normalize(Poly num, std::vector<DenFactor> den,
                        AssumptionSet assume, bool den_canonical) {
    num = num.reduced();
    if (!den_canonical) canonicalize(num, den);
    cancel(num, den, assume);
    Expr e;
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    if (!assume.empty()) {
      e.assume_ = std::make_shared<const AssumptionSet>(std::move(assume));
    }
    return e;
  }

  static Expr raw(Poly num, std::vector<DenFactor> den,
                  std::shared_ptr<const AssumptionSet> assume) {
    Expr e;
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    e.assume_ = std::move(assume);
    return e;
  }

  static AssumptionSet merged(const Expr& a, const Expr& b) {
    return merge_assumptions(a.assumptions(), b.assumptions());
  }

 private:
  static void canonicalize(Poly& num, std::vector<DenFactor>& den) {
    std::vector<DenFactor> work = std::move(den);
    std::vector<DenFactor> out;
    while (!work.empty()) {
      DenFactor f = std::move(work.back());
      work.pop_back();
      if (f.mult == 0) continue;
      f.poly = f.poly.reduced();
      if (f.poly.is_zero()) throw DivisionByZero("division by zero");

      if (auto w = largest_sqrt_atom(f.poly)) {
        // f = A + B*w  ->  (A - B*w) / (A^2 - B^2 R)
        Poly a;
        Poly b;
        for (const auto& [m, c] : f.poly.terms()) {
          if (m.degree(*w) == 1) {
            b.add_term(m.without(*w), c);
          } else {
            a.add_term(m, c);
          }
        }
        Poly conj = a - Poly::mul_free(b, Poly::symbol(*w));
        const Poly& r = *w->data().radicand;
        Poly norm = a * a - b * b * r;
        if (norm.is_zero()) {
          throw DivisionByZero("denominator vanishes modulo " + w->name());
        }
        num = num * conj.pow(f.mult);
        work.push_back({std::move(norm), f.mult});
        continue;
      }

      Monomial g = monomial_content(f.poly);
      if (!g.empty()) {
        f.poly = f.poly.times(g.pow(-1));
        for (const auto& [s, e] : g.factors()) {
          if (s.is_atom(AtomHead::kExp)) {
            num = num.times(Monomial(s, -e * f.mult));
          } else {
            out.push_back({Poly::symbol(s), e * f.mult});
          }
        }
      }
      if (f.poly.is_constant()) {
        Rational c = f.poly.constant_value();
        Rational ck = 1;
        for (int i = 0; i < f.mult; ++i) ck *= c;
        num = num.scaled(1 / ck);
        continue;
      }
      Rational c = f.poly.make_primitive();
      if (c != 1) {
        Rational ck = 1;
        for (int i = 0; i < f.mult; ++i) ck *= c;
        num = num.scaled(1 / ck);
      }
      out.push_back(std::move(f));
    }
    sort_merge(out);
    den = std::move(out);
  }

  static void cancel(Poly& num, std::vector<DenFactor>& den,
                     AssumptionSet& assume) {
    if (num.is_zero()) {
      for (auto& f : den) {
        insert_assumption(assume, {f.poly, Assumption::Kind::kNonZero});
      }
      den.clear();
      return;
    }
    for (auto& f : den) {
      bool cancelled = false;
      while (f.mult > 0 && may_divide(num, f.poly)) {
        auto q = num.divide_exact(f.poly);
        if (!q) break;
        num = q->reduced();
        --f.mult;
        cancelled = true;
      }
      if (cancelled) {
        insert_assumption(assume, {f.poly, Assumption::Kind::kNonZero});
      }
    }
    den.erase(std::remove_if(den.begin(), den.end(),
                             [](const DenFactor& f) { return f.mult == 0; }),
              den.end());
  }
};

std::string Assumption::str() const {
  return std::string(kind == Kind::kNonZero ? "nonzero(" : "positive(") +
         render(poly) + ")";
}

AssumptionSet merge_assumptions(const AssumptionSet& a,
                                const AssumptionSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  AssumptionSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

Expr Expr::from_poly(Poly p) {
  return ExprBuilder::raw(p.reduced(), {}, nullptr);
}

Expr Expr::fraction(Poly num, const std::vector<DenFactor>& den) {
  return ExprBuilder::normalize(std::move(num), den, {}, false);
}

Poly Expr::den_poly() const {
  Poly d(1);
  for (const auto& f : den_) d = d * f.poly.pow(f.mult);
  return d;
}

const AssumptionSet& Expr::assumptions() const {
  return assume_ ? *assume_ : empty_assumptions();
}

Expr Expr::without_assumptions() const {
  return ExprBuilder::raw(num_, den_, nullptr);
}

void Expr::add_assumptions(const AssumptionSet& a) {
  if (a.empty()) return;
  assume_ = std::make_shared<const AssumptionSet>(
      merge_assumptions(assumptions(), a));
}

bool Expr::same_representation(const Expr& o) const {
  if (num_ != o.num_ || den_.size() != o.den_.size()) return false;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (den_[i].mult != o.den_[i].mult || den_[i].poly != o.den_[i].poly) {
      return false;
    }
  }
  return true;
}

Expr Expr::operator-() const { return ExprBuilder::raw(-num_, den_, assume_); }

namespace {

// Multiplier bringing `from` up to the common denominator `to`.
Poly lift(const std::vector<DenFactor>& from, const std::vector<DenFactor>& to) {
  Poly m(1);
  std::size_t j = 0;
  for (const auto& f : to) {
    int have = 0;
    while (j < from.size() && Poly::compare(from[j].poly, f.poly) < 0) ++j;
    if (j < from.size() && from[j].poly == f.poly) have = from[j].mult;
    if (f.mult > have) m = m * f.poly.pow(f.mult - have);
  }
  return m;
}

std::vector<DenFactor> den_lcm(const std::vector<DenFactor>& a,
                               const std::vector<DenFactor>& b) {
  std::vector<DenFactor> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size()   ? 1
            : j == b.size() ? -1
                            : Poly::compare(a[i].poly, b[j].poly);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].poly, std::max(a[i].mult, b[j].mult)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero() && a.assumptions().empty()) return b;
  if (b.is_zero() && b.assumptions().empty()) return a;
  if (a.is_polynomial() && b.is_polynomial()) {
    auto as = ExprBuilder::merged(a, b);
    return ExprBuilder::raw(
        a.num() + b.num(), {},
        as.empty() ? nullptr : std::make_shared<const AssumptionSet>(as));
  }
  auto den = den_lcm(a.den(), b.den());
  Poly num = a.num() * lift(a.den(), den) + b.num() * lift(b.den(), den);
  return ExprBuilder::normalize(std::move(num), std::move(den),
                                ExprBuilder::merged(a, b), true);
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    auto as = ExprBuilder::merged(a, b);
    return ExprBuilder::raw(
        a.num() * b.num(), {},
        as.empty() ? nullptr : std::make_shared<const AssumptionSet>(as));
  }
  std::vector<DenFactor> den = a.den();
  den.insert(den.end(), b.den().begin(), b.den().end());
  sort_merge(den);
  return ExprBuilder::normalize(a.num() * b.num(), std::move(den),
                                ExprBuilder::merged(a, b), true);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero expression");
  std::vector<DenFactor> den = a.den();
  den.push_back({b.num(), 1});
  Poly num = a.num() * b.den_poly();
  return ExprBuilder::normalize(std::move(num), std::move(den),
                                ExprBuilder::merged(a, b), false);
}

Expr Expr::pow(int e) const {
  if (e < 0) return Expr(1) / pow(-e);
  if (e == 0) return Expr(1);
  std::vector<DenFactor> den = den_;
  for (auto& f : den) f.mult *= e;
  return ExprBuilder::raw(num_.pow(e), std::move(den), assume_);
}

void Expr::for_each_symbol(const std::function<void(Symbol)>& fn,
                           bool into_atoms) const {
  auto visit_poly = [&](const Poly& p, auto& self) -> void {
    for (const auto& [m, c] : p.terms()) {
      for (const auto& [s, e] : m.factors()) {
        fn(s);
        if (into_atoms && s.is_atom()) s.data().arg->for_each_symbol(fn, true);
      }
    }
    (void)self;
  };
  visit_poly(num_, visit_poly);
  for (const auto& f : den_) visit_poly(f.poly, visit_poly);
}

std::set<Symbol> Expr::symbols(bool into_atoms) const {
  std::set<Symbol> out;
  for_each_symbol([&](Symbol s) { out.insert(s); }, into_atoms);
  return out;
}

bool Expr::depends_on(Symbol s) const {
  return any_symbol([s](Symbol t) { return t == s; });
}

bool Expr::any_symbol(const std::function<bool(Symbol)>& pred) const {
  bool found = false;
  for_each_symbol([&](Symbol s) { found = found || pred(s); });
  return found;
}

}  // namespace symkit
