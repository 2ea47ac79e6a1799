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

// Rational functions over symbols and atoms.
//
// An Expr is num / (f1^k1 * ... * fn^kn): the numerator carries every
// constant and every exp-atom unit; each denominator factor is a primitive
// polynomial (coprime integer coefficients, positive leading coefficient,
// exp exponents shifted to start at zero) free of sqrt atoms, which are
// rationalized away. Zero testing reduces to testing the relation-reduced
// numerator, which is decisive: it does not depend on denominator gcds.
//
// Cancelling a denominator factor records that factor in the assumption
// ledger (it was divided out, so the result assumes it is nonzero).

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "symkit/error.hpp"
#include "symkit/expr/poly.hpp"
#include "symkit/expr/symbol.hpp"

namespace symkit {

struct Assumption {
  enum class Kind : std::uint8_t { kNonZero, kPositive };
  Poly poly;
  Kind kind = Kind::kNonZero;

  std::string str() const;
  friend bool operator<(const Assumption& a, const Assumption& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return Poly::compare(a.poly, b.poly) < 0;
  }
  friend bool operator==(const Assumption& a, const Assumption& b) {
    return a.kind == b.kind && a.poly == b.poly;
  }
};

using AssumptionSet = std::vector<Assumption>;  // sorted, unique

struct DenFactor {
  Poly poly;
  int mult = 1;
};

class Expr {
 public:
  Expr() = default;
  Expr(long c) : num_(Rational(c)) {}              // NOLINT
  Expr(int c) : num_(Rational(c)) {}               // NOLINT
  Expr(const Rational& c) : num_(c) {}             // NOLINT
  explicit Expr(Symbol s) : num_(Poly::symbol(s)) {}
  static Expr from_poly(Poly p);
  // num / prod(den); den factors need not be canonical.
  static Expr fraction(Poly num, const std::vector<DenFactor>& den);
  static Expr rational(long n, long d) { return Expr(Rational(n, d)); }

  const Poly& num() const { return num_; }
  const std::vector<DenFactor>& den() const { return den_; }
  Poly den_poly() const;

  // Zero test. A numerator that does not vanish literally is retried with
  // exp/sin/cos atoms on a common argument rewritten over one base
  // (exp(1) as exp(1/3)^3, cos(x) via sin(x/2) and cos(x/2)).
  bool is_zero() const { return num_.is_zero() || rebased_zero(num_); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  Rational constant_value() const { return num_.constant_value(); }

  static bool rebased_zero(const Poly& num);

  Expr operator-() const;
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr& operator/=(const Expr& o) { return *this = *this / o; }
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr pow(int e) const;

  // Mathematical equality: (a - b) normalizes to zero.
  bool equals(const Expr& o) const { return (*this - o).is_zero(); }
  // Identical canonical representation.
  bool same_representation(const Expr& o) const;

  const AssumptionSet& assumptions() const;
  Expr without_assumptions() const;
  void add_assumptions(const AssumptionSet& a);

  std::string str() const;

  // Visits every symbol occurring in the expression; descends into atom
  // arguments when `into_atoms` is set (the atom itself is visited too).
  void for_each_symbol(const std::function<void(Symbol)>& fn,
                       bool into_atoms = true) const;
  std::set<Symbol> symbols(bool into_atoms = true) const;
  bool depends_on(Symbol s) const;
  bool any_symbol(const std::function<bool(Symbol)>& pred) const;

 private:
  friend class ExprBuilder;
  Poly num_;
  std::vector<DenFactor> den_;  // sorted by PolyLess, canonical factors
  std::shared_ptr<const AssumptionSet> assume_;
};

// Transcendental heads. tan(A) is represented as sin(A)/cos(A).
Expr exp(const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr tan(const Expr& a);
Expr sqrt(const Expr& a);

// Exact partial derivative with respect to `s`. Opaque functions depending on
// `s` produce their derivative symbols; atoms follow the chain rule.
Expr diff(const Expr& e, Symbol s);
Expr diff(const Expr& e, Symbol s, int order);

using SubstMap = std::map<Symbol, Expr>;
// Simultaneous substitution followed by normalization. Atoms whose arguments
// change are rebuilt through their head.
Expr substitute(const Expr& e, const SubstMap& bindings);

// Splits e = sum_m coeff(m) * m over monomials m in `vars`. The key is the
// monomial restricted to `vars` (empty monomial = residual part). Throws if a
// denominator depends on one of `vars`.
std::map<Monomial, Expr, MonomialDescending> collect(
    const Expr& e, const std::vector<Symbol>& vars);

std::string render(const Poly& p);
std::string render(const Monomial& m);

AssumptionSet merge_assumptions(const AssumptionSet& a, const AssumptionSet& b);

}  // namespace symkit
