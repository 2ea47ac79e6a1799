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

// Determining equations for point symmetries of an SKT system.
//
// Stage A starts from fully opaque xi0, xi1, eta1, eta2 over (t, x, u, v) and
// repeatedly reads off coefficients of the form c * f (c free of unknowns),
// which force f = 0. Stage B regenerates the split with the reduced
// dependencies xi0(t), xi1(t, x), eta(t, x, u, v).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symkit/expr/parse.hpp"
#include "symkit/invariance/skt.hpp"

namespace symkit {

struct DeterminingSystem {
  // Stage A: derivatives forced to vanish (minimal ones only).
  std::vector<Expr> xi_conditions;
  // Stage B: merged, numerator-only equations with coprime coefficients.
  std::vector<Expr> equations;
  // Stage B coefficients before merging.
  std::vector<Expr> raw;
  AssumptionSet assumptions;

  // The xi block counts as one equation.
  std::size_t count() const {
    return equations.size() + (xi_conditions.empty() ? 0 : 1);
  }
};

struct DeterminingOptions {
  // Factors registered as nonzero; two equations whose ratio is a
  // non-constant function-free expression are merged only when that ratio
  // is a product of registered factors.
  std::vector<Poly> nonzero;
  bool run_stage_a = true;
};

DeterminingSystem generate_determining(const SKTSystem& sys,
                                       const DeterminingOptions& opt = {});

// Scopes naming the unknowns: full dependencies for stage A, reduced for B.
const Scope& determining_scope_full();
const Scope& determining_scope_reduced();

// The reduced field with opaque coefficients.
VectorField opaque_reduced_field();

// Replaces every opaque xi0, xi1, eta1, eta2 symbol (and derivative) in `eq`
// by the matching derivative of X's coefficients.
Expr instantiate_unknowns(const Expr& eq, const VectorField& X);

// Numerator divided by its positive rational content; the sign is kept.
Expr normalize_equation(const Expr& e);

// If a = r * b with r free of unknown functions, returns r.
std::optional<Expr> proportional(const Expr& a, const Expr& b);

struct GoldenEntry {
  std::string label;
  char stage = 'B';
  Expr equation;
};

std::vector<GoldenEntry> read_golden(const std::string& path);

struct GoldenMatch {
  std::string label;
  int generated = -1;  // index into equations / xi_conditions, -1 unmatched
  Expr multiplier;     // golden = multiplier * generated
  std::string note;
};

struct GoldenReport {
  std::vector<GoldenMatch> matches;
  std::vector<int> unmatched_generated;  // stage B indices
  bool clean() const;
  std::string str() const;
};

GoldenReport compare_golden(const DeterminingSystem& ds,
                            const std::vector<GoldenEntry>& golden);

}  // namespace symkit
