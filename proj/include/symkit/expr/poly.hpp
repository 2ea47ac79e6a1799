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

// Sparse multivariate polynomials with exact rational coefficients.
//
// Exponents are non-negative except for exp atoms, which are units and may
// carry negative powers (Laurent monomials). Products are reduced by the atom
// relations: sqrt(R)^2 -> R and sin(A)^2 -> 1 - cos(A)^2.

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "symkit/expr/symbol.hpp"

namespace symkit {

using Rational = mpq_class;

class Monomial {
 public:
  using Factor = std::pair<Symbol, int>;

  Monomial() = default;
  explicit Monomial(Symbol s, int e = 1);

  const std::vector<Factor>& factors() const { return f_; }
  bool empty() const { return f_.empty(); }
  int degree(Symbol s) const;
  int total_degree() const;

  Monomial operator*(const Monomial& o) const;
  Monomial pow(int e) const;
  // True when every exponent of `this` is <= the matching one in `o`.
  bool divides(const Monomial& o) const;
  // o / this, assuming divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial without(Symbol s) const;
  Monomial with(Symbol s, int e) const;

  // Lexicographic order, largest symbol first.
  static int compare(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.f_ == b.f_;
  }

 private:
  std::vector<Factor> f_;  // sorted ascending by symbol key, no zero exponents
};

struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) > 0;
  }
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialDescending>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  static Poly symbol(Symbol s, int e = 1);
  static Poly monomial(const Monomial& m, const Rational& c = 1);

  const TermMap& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  const Monomial& leading_monomial() const { return t_.begin()->first; }
  const Rational& leading_coefficient() const { return t_.begin()->second; }

  void add_term(const Monomial& m, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  // Reduced product.
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  Poly times(const Monomial& m) const;  // no reduction
  Poly pow(int e) const;

  // Product in the free polynomial ring (atom relations not applied).
  static Poly mul_free(const Poly& a, const Poly& b);
  // Applies the atom relations until no reducible power remains.
  Poly reduced() const;

  // Exact quotient this / d in the free ring (Laurent in exp atoms), or
  // nullopt when d does not divide.
  std::optional<Poly> divide_exact(const Poly& d) const;

  // Formal partial derivative treating `s` as an independent variable.
  Poly partial(Symbol s) const;
  int max_degree(Symbol s) const;
  int min_degree(Symbol s) const;

  // Rational content: positive rational c such that this / c has coprime
  // integer coefficients.
  Rational content() const;
  // this / content, with the leading coefficient made positive. Returns the
  // multiplier used (content times sign).
  Rational make_primitive();

  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  static int compare(const Poly& a, const Poly& b);

 private:
  TermMap t_;
};

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const {
    return Poly::compare(a, b) < 0;
  }
};

}  // namespace symkit
