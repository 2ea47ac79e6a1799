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

// Lie brackets of vector fields and closure of finite-dimensional spans.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symkit/jet/jet.hpp"

namespace symkit {

// [X, Y] = X(Y coeffs) - Y(X coeffs), componentwise on (xi0, xi1, eta1, eta2).
VectorField commutator(const VectorField& X, const VectorField& Y);

// Constants c with v = sum c_k basis_k, each c_k free of t, x, u, v and of
// atoms (so rational in the parameters). Candidates come from sampling the
// coordinates at rational points; the returned solution is verified exactly.
struct Decomposition {
  std::vector<Expr> coeffs;
  bool degenerate = false;  // sampled system had deficient rank
};
std::optional<Decomposition> decompose(const VectorField& v,
                                       const std::vector<VectorField>& basis);

struct ClosureReport {
  bool closes = true;
  bool degenerate = false;
  // constants[i][j][k]: [X_i, X_j] = sum_k constants[i][j][k] X_k, i < j.
  std::vector<std::vector<std::vector<Expr>>> constants;
  int fail_i = -1;
  int fail_j = -1;
  VectorField residual;  // the failing bracket

  bool abelian() const;
  std::string str(const std::vector<VectorField>& ops) const;
};

ClosureReport closure_check(const std::vector<VectorField>& ops);

}  // namespace symkit
