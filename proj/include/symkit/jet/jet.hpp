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

// Vector fields on (t, x, u, v), total derivatives and second prolongation.

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "symkit/expr/expr.hpp"
#include "symkit/expr/parse.hpp"

namespace symkit {

class OrderOverflow : public DomainError {
 public:
  using DomainError::DomainError;
};

struct VectorField {
  Expr xi0;
  Expr xi1;
  Expr eta1;
  Expr eta2;
  std::string name;

  // Coefficients in (t, x, u, v) order.
  std::array<const Expr*, 4> coeffs() const { return {&xi0, &xi1, &eta1, &eta2}; }
  bool is_zero() const;
  // Component-wise mathematical equality.
  bool equals(const VectorField& o) const;

  // Serialized as four lines xi0=..., xi1=..., eta1=..., eta2=...
  std::string str() const;
  static VectorField parse_text(const std::map<std::string, std::string>& kv,
                                const Scope& scope = Scope::standard());

  VectorField scaled(const Expr& c) const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
};

// X(f) = xi0 f_t + xi1 f_x + eta1 f_u + eta2 f_v.
Expr apply_field(const VectorField& X, const Expr& f);

// Coordinate symbols t, x, u, v.
std::array<Symbol, 4> base_coordinates();

// Jet variables of order 1 and 2 in a fixed order.
const std::vector<Symbol>& derivative_jets();

enum class Direction { kT, kX };

// D_t or D_x on expressions over jets of order <= 1.
Expr total_derivative(const Expr& e, Direction d);

struct ProlongedField {
  VectorField base;
  // [component 0 = u, 1 = v]
  std::array<Expr, 2> rho_t;
  std::array<Expr, 2> rho_x;
  std::array<Expr, 2> sigma_tt;
  std::array<Expr, 2> sigma_tx;
  std::array<Expr, 2> sigma_xx;
  bool has_time_second = false;  // sigma_tt and sigma_tx computed
};

// With `time_second` unset only rho and sigma_xx are produced, which is all
// that acting on evolution equations needs.
ProlongedField prolong2(const VectorField& X, bool time_second = true);

// sigma_xt computed as D_t(rho_x) - u_tx D_t xi0 - u_xx D_t xi1; equals
// sigma_tx for every field.
std::array<Expr, 2> sigma_xt(const ProlongedField& P);

Expr apply_prolonged(const ProlongedField& P, const Expr& e);

// Coefficients of e over monomials in the derivative jets; the empty
// monomial carries the jet-free part.
std::map<Monomial, Expr, MonomialDescending> collect_jet(const Expr& e);

}  // namespace symkit
