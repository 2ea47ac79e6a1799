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

// Constructors for exp, sin, cos and sqrt.
//
// Atom-free terms of polynomial arguments are split into per-monomial base
// atoms: exp(c*m) with c = p/q becomes exp(m/q)^p, and sin/cos expand by
// angle addition and integer multiples. Terms that carry atoms stay together
// in one atom. Every other argument becomes a single atom with its
// sign canonicalized (leading numerator coefficient positive).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "symkit/expr/expr.hpp"

namespace symkit {

namespace {

// Beyond this multiple the Chebyshev expansion is not worth it; the term
// stays a single atom.
constexpr long kMaxTrigMultiple = 24;

struct SplitTerm {
  Monomial mono;
  Rational base_coeff;  // 1/q
  long multiple;        // p
};

// c*m with c = p/q in lowest terms.
SplitTerm split(const Monomial& m, const Rational& c) {
  SplitTerm t;
  t.mono = m;
  t.base_coeff = Rational(mpz_class(1), c.get_den());
  t.multiple = c.get_num().get_si();
  return t;
}

bool fits_long(const Rational& c) { return c.get_num().fits_slong_p(); }

Expr base_arg(const SplitTerm& t) {
  return Expr::from_poly(Poly::monomial(t.mono, t.base_coeff));
}

// Sign-canonical argument: leading numerator coefficient positive.
std::pair<Expr, bool> sign_canonical(const Expr& a) {
  if (!a.num().is_zero() && a.num().leading_coefficient() < 0) {
    return {(-a).without_assumptions(), true};
  }
  return {a.without_assumptions(), false};
}

// (sin, cos) of n*theta from (sin theta, cos theta).
std::pair<Expr, Expr> multiple_angle(const Expr& s, const Expr& c, long n) {
  bool neg = n < 0;
  if (neg) n = -n;
  Expr sp(0);
  Expr cp(1);
  Expr sk = s;
  Expr ck = c;
  for (long k = 1; k < n; ++k) {
    Expr sn = Expr(2) * c * sk - sp;
    Expr cn = Expr(2) * c * ck - cp;
    sp = sk;
    cp = ck;
    sk = sn;
    ck = cn;
  }
  if (n == 0) return {Expr(0), Expr(1)};
  return {neg ? -sk : sk, ck};
}

std::pair<Expr, Expr> trig_atom_pair(const Expr& arg) {
  return {Expr(sym::atom(AtomHead::kSin, arg)),
          Expr(sym::atom(AtomHead::kCos, arg))};
}

bool carries_atom(const Monomial& m) {
  for (const auto& [s, e] : m.factors()) {
    if (s.is_atom()) return true;
  }
  return false;
}

// Atom-free terms of a polynomial argument, and the rest.
std::pair<Poly, Poly> split_atom_terms(const Poly& p) {
  Poly plain;
  Poly rest;
  for (const auto& [m, c] : p.terms()) {
    (carries_atom(m) ? rest : plain) += Poly::monomial(m, c);
  }
  return {plain, rest};
}

// (sin A, cos A) for any A.
std::pair<Expr, Expr> sin_cos(const Expr& a) {
  if (a.is_zero()) return {Expr(0), Expr(1)};
  if (!a.is_polynomial()) {
    auto [arg, neg] = sign_canonical(a);
    auto [s, c] = trig_atom_pair(arg);
    return {neg ? -s : s, c};
  }
  auto [plain, rest] = split_atom_terms(a.num());
  Expr s_acc(0);
  Expr c_acc(1);
  if (!rest.is_zero()) {
    auto [arg, neg] = sign_canonical(Expr::from_poly(rest));
    auto [s, c] = trig_atom_pair(arg);
    s_acc = neg ? -s : s;
    c_acc = c;
  }
  Symbol pi = sym::pi();
  for (const auto& [m, coef] : plain.terms()) {
    Expr s_t;
    Expr c_t;
    Rational twice = coef * 2;
    if (m == Monomial(pi) && twice.get_den() == 1) {
      // Exact values at multiples of pi/2.
      mpz_class k = twice.get_num() % 4;
      if (k < 0) k += 4;
      static const int kSin[4] = {0, 1, 0, -1};
      static const int kCos[4] = {1, 0, -1, 0};
      s_t = Expr(kSin[k.get_si()]);
      c_t = Expr(kCos[k.get_si()]);
    } else if (fits_long(coef) &&
               std::abs(coef.get_num().get_si()) <= kMaxTrigMultiple) {
      SplitTerm st = split(m, coef);
      auto [s1, c1] = trig_atom_pair(base_arg(st));
      std::tie(s_t, c_t) = multiple_angle(s1, c1, st.multiple);
    } else {
      Expr arg = Expr::from_poly(Poly::monomial(m, coef));
      auto [carg, neg] = sign_canonical(arg);
      auto [s1, c1] = trig_atom_pair(carg);
      s_t = neg ? -s1 : s1;
      c_t = c1;
    }
    Expr s_new = s_acc * c_t + c_acc * s_t;
    Expr c_new = c_acc * c_t - s_acc * s_t;
    s_acc = std::move(s_new);
    c_acc = std::move(c_new);
  }
  return {s_acc, c_acc};
}

// Smallest square-free-ish cofactor: n = s^2 * k with small primes removed
// from k; large square cofactors are caught by the perfect-square test.
std::pair<mpz_class, mpz_class> square_split(mpz_class n) {
  mpz_class s = 1;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return {r, 1};
  }
  for (unsigned long p = 2; p < 1000 && p * p <= n; ++p) {
    mpz_class pp = p * p;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      s *= p;
    }
  }
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return {s * r, 1};
  }
  return {s, n};
}

// Rebasing for the zero test. Atoms exp(c*A) and sin/cos(c*A) sharing the
// content-free argument A but not the rational c are rewritten over g*A, g
// the rational gcd of the coefficients.
constexpr long kMaxRebaseMultiple = 48;

thread_local bool g_rebasing = false;

struct AtomUse {
  Symbol atom;
  Rational coeff;
};

struct Group {
  Expr primitive;  // A
  std::vector<AtomUse> uses;
};

using Groups = std::map<std::string, Group>;

class AtomScan {
 public:
  void poly(const Poly& p) {
    for (const auto& [m, c] : p.terms()) {
      for (const auto& [s, e] : m.factors()) symbol(s);
    }
  }

  void expr(const Expr& e) {
    poly(e.num());
    for (const auto& f : e.den()) poly(f.poly);
  }

  Groups exp_groups;
  Groups trig_groups;

 private:
  void symbol(Symbol s) {
    if (!s.is_atom() || !seen_.insert(s).second) return;
    const SymbolData& d = s.data();
    if (d.head == AtomHead::kSqrt) {
      if (d.radicand) poly(*d.radicand);
      return;
    }
    if (!d.arg) return;
    expr(*d.arg);
    const Expr& a = *d.arg;
    if (a.num().is_zero() || a.num().leading_coefficient() < 0) return;
    Rational c = a.num().content();
    Expr primitive = a * Expr(Rational(1) / c);
    Groups& groups = d.head == AtomHead::kExp ? exp_groups : trig_groups;
    Group& g = groups[primitive.str()];
    if (g.uses.empty()) g.primitive = primitive;
    g.uses.push_back({s, c});
  }

  std::set<Symbol> seen_;
};

void rebase_groups(const Groups& groups, bool trig, SubstMap& out) {
  for (const auto& [key, g] : groups) {
    std::set<Rational> coeffs;
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& u : g.uses) {
      coeffs.insert(u.coeff);
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), u.coeff.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), u.coeff.get_den_mpz_t());
    }
    if (coeffs.size() < 2) continue;
    Rational unit(num_gcd, den_lcm);
    unit.canonicalize();
    bool fits = true;
    for (const Rational& c : coeffs) {
      Rational k = c / unit;
      if (!k.get_num().fits_slong_p() ||
          (trig && std::abs(k.get_num().get_si()) > kMaxRebaseMultiple)) {
        fits = false;
      }
    }
    if (!fits) continue;
    Expr base = (g.primitive * Expr(unit)).without_assumptions();
    for (const auto& u : g.uses) {
      if (u.coeff == unit) continue;
      long k = Rational(u.coeff / unit).get_num().get_si();
      if (!trig) {
        out[u.atom] = Expr::from_poly(
            Poly::symbol(sym::atom(AtomHead::kExp, base), static_cast<int>(k)));
        continue;
      }
      auto [s1, c1] = trig_atom_pair(base);
      auto [sk, ck] = multiple_angle(s1, c1, k);
      out[u.atom] = u.atom.is_atom(AtomHead::kSin) ? sk : ck;
    }
  }
}

}  // namespace

bool Expr::rebased_zero(const Poly& num) {
  if (g_rebasing) return false;
  bool atoms = false;
  for (const auto& [m, c] : num.terms()) {
    for (const auto& [s, e] : m.factors()) atoms = atoms || s.is_atom();
  }
  if (!atoms) return false;
  g_rebasing = true;
  struct Reset {
    ~Reset() { g_rebasing = false; }
  } reset;
  Expr cur = Expr::from_poly(num);
  for (int round = 0; round < 3; ++round) {
    AtomScan scan;
    scan.poly(cur.num());
    SubstMap map;
    rebase_groups(scan.exp_groups, false, map);
    rebase_groups(scan.trig_groups, true, map);
    if (map.empty()) return false;
    cur = substitute(cur, map);
    if (cur.num().is_zero()) return true;
  }
  return false;
}

Expr exp(const Expr& a) {
  if (a.is_zero()) return Expr(1);
  if (!a.is_polynomial()) {
    auto [arg, neg] = sign_canonical(a);
    return Expr::from_poly(
        Poly::symbol(sym::atom(AtomHead::kExp, arg), neg ? -1 : 1));
  }
  auto [plain, rest] = split_atom_terms(a.num());
  Monomial acc;
  if (!rest.is_zero()) {
    auto [arg, neg] = sign_canonical(Expr::from_poly(rest));
    acc = Monomial(sym::atom(AtomHead::kExp, arg), neg ? -1 : 1);
  }
  for (const auto& [m, coef] : plain.terms()) {
    if (!fits_long(coef)) {
      throw DomainError("exp multiple too large: " + a.str());
    }
    SplitTerm st = split(m, coef);
    acc = acc * Monomial(sym::atom(AtomHead::kExp, base_arg(st)),
                         static_cast<int>(st.multiple));
  }
  return Expr::from_poly(Poly::monomial(acc));
}

Expr sin(const Expr& a) { return sin_cos(a).first; }
Expr cos(const Expr& a) { return sin_cos(a).second; }

Expr tan(const Expr& a) {
  auto [s, c] = sin_cos(a);
  return s / c;
}

Expr sqrt(const Expr& a) {
  if (a.is_zero()) return Expr(0);
  if (!a.is_polynomial()) {
    // sqrt(P / prod f^k) = sqrt(P * prod f^(k mod 2)) / prod f^ceil(k/2),
    // valid where every f > 0.
    Poly inner = a.num();
    Expr outer(1);
    AssumptionSet pos;
    for (const auto& f : a.den()) {
      if (f.mult % 2) inner = inner * f.poly;
      outer = outer * Expr::from_poly(f.poly.pow((f.mult + 1) / 2));
      pos.push_back({f.poly, Assumption::Kind::kPositive});
    }
    std::sort(pos.begin(), pos.end());
    Expr r = sqrt(Expr::from_poly(inner)) / outer;
    r.add_assumptions(pos);
    r.add_assumptions(a.assumptions());
    return r;
  }

  Poly p = a.num();
  if (p.is_constant()) {
    Rational c = p.constant_value();
    if (c < 0) throw DomainError("sqrt of negative constant " + a.str());
    auto [s, k] = square_split(mpz_class(c.get_num() * c.get_den()));
    Rational outer(s, c.get_den());
    outer.canonicalize();
    if (k == 1) return Expr(outer);
    return Expr(outer) *
           Expr(sym::sqrt_atom(Poly(Rational(k))));
  }

  // Pull out even exp powers: sqrt(exp(A)^(2k) * Q) = exp(A)^k * sqrt(Q),
  // leaving each minimum exponent at 0 or 1 so no half-argument atom appears.
  Expr prefactor(1);
  Monomial shift;
  std::map<Symbol, int> mins;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [s, e] : m.factors()) {
      if (s.is_atom(AtomHead::kExp)) mins.emplace(s, 0);
    }
  }
  for (auto& [s, lo] : mins) {
    lo = p.min_degree(s);
    int half = lo >= 0 ? lo / 2 : -((-lo + 1) / 2);
    if (half == 0) continue;
    shift = shift * Monomial(s, -2 * half);
    prefactor = prefactor * Expr::from_poly(Poly::symbol(s, half));
  }
  if (!shift.empty()) p = p.times(shift);

  // Rational content: c = n/d, n*d = s^2*k.
  Rational content = p.content();
  p = p.scaled(1 / content);
  auto [s, k] = square_split(mpz_class(content.get_num() * content.get_den()));
  Rational outer(s, content.get_den());
  outer.canonicalize();
  if (k != 1) p = p.scaled(Rational(k));
  if (p.is_constant()) {
    return prefactor * Expr(outer) * sqrt(Expr(p.constant_value()));
  }
  Expr r = prefactor * Expr(outer) * Expr(sym::sqrt_atom(p));
  r.add_assumptions(a.assumptions());
  return r;
}

}  // namespace symkit
