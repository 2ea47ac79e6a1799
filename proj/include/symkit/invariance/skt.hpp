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

// The twelve-parameter cross-diffusion system
//
//   u_t = [(d1 + d11 u + d12 v) u]_xx + u (a1 - b1 u - c1 v)
//   v_t = [(d2 + d21 u + d22 v) v]_xx + v (a2 - b2 u - c2 v)
//
// and invariance verdicts for point symmetries.

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "symkit/expr/expr.hpp"
#include "symkit/jet/jet.hpp"

namespace symkit {

// u_t = rhs[0], v_t = rhs[1], right-hand sides over (t, x, u, v, u_x, v_x,
// u_xx, v_xx).
struct EvolutionSystem {
  std::array<Expr, 2> rhs;

  // S_k = -u^k_t + rhs_k.
  Expr S(int k) const;
  EvolutionSystem swapped() const;  // u <-> v
};

class SKTSystem {
 public:
  static const std::array<const char*, 12>& parameter_names();

  SKTSystem();  // all parameters zero
  // Unlisted parameters are zero.
  static SKTSystem from_map(const std::map<std::string, Expr>& params);
  // Every parameter its own symbol.
  static SKTSystem generic();

  const Expr& get(const std::string& name) const;
  void set(const std::string& name, Expr value);
  const std::array<Expr, 12>& params() const { return p_; }

  Expr rhs(int k) const;  // expanded form
  Expr S(int k) const { return evolution().S(k); }
  EvolutionSystem evolution() const;
  SKTSystem swapped() const;
  SKTSystem substituted(const SubstMap& m) const;

  bool equals(const SKTSystem& o) const;
  std::string str() const;

  // Recorded restrictions (e.g. cross-diffusion gate); metadata only.
  std::vector<std::string> restrictions;

 private:
  std::array<Expr, 12> p_;
};

// Eliminates u_t and v_t through the evolution equations. Mixed and second
// time derivatives stay free coordinates of the second-order jet space.
Expr manifold_restrict(const Expr& e, const EvolutionSystem& sys);
inline Expr manifold_restrict(const Expr& e, const SKTSystem& sys) {
  return manifold_restrict(e, sys.evolution());
}

struct Witness {
  int equation = 0;  // 0 for S1, 1 for S2
  Monomial monomial;
  Expr coefficient;
};

struct Verdict {
  bool invariant = true;
  std::vector<Witness> witnesses;
  AssumptionSet assumptions;
};

// Restricted invariance condition X2 S_k |M for k = 0, 1.
std::array<Expr, 2> invariance_condition(const EvolutionSystem& sys,
                                         const VectorField& X);

Verdict check_invariance(const EvolutionSystem& sys, const VectorField& X);
inline Verdict check_invariance(const SKTSystem& sys, const VectorField& X) {
  return check_invariance(sys.evolution(), X);
}

// Field with u and v exchanged in coordinates and components.
VectorField swap_uv(const VectorField& X);

}  // namespace symkit
