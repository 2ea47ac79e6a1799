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

#include "symkit/invariance/algebra.hpp"

#include <sstream>

namespace symkit {

namespace {

// Rational sample points, away from u = v and from common poles.
SubstMap sample_point(int k) {
  static const long kT[] = {3, 5, 2, 7, 11, 13, 4, 9, 17, 6};
  static const long kX[] = {2, 7, 5, 3, 4, 9, 11, 8, 13, 10};
  static const long kU[] = {5, 3, 8, 11, 2, 7, 13, 4, 9, 17};
  static const long kV[] = {1, 9, 4, 2, 13, 3, 5, 17, 6, 7};
  int i = k % 10;
  long shift = k / 10;
  return {{sym::t(), Expr::rational(kT[i] + shift, 7)},
          {sym::x(), Expr::rational(kX[i], 5 + shift)},
          {sym::u(), Expr::rational(kU[i] + 20 * shift, 3)},
          {sym::v(), Expr::rational(-kV[i] - shift, 2)}};
}

bool is_structure_constant(const Expr& c) {
  return !c.any_symbol([](Symbol s) {
    return s.is_atom() || s.is_jet() || s.kind() == SymbolKind::kBase ||
           s.kind() == SymbolKind::kFunction;
  });
}

// Solves A c = b by Gaussian elimination; free unknowns are set to zero.
std::optional<std::vector<Expr>> solve(std::vector<std::vector<Expr>> A,
                                       std::vector<Expr> b, std::size_t n,
                                       bool* deficient) {
  std::size_t rows = A.size();
  std::vector<int> pivot_row(n, -1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && A[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    Expr inv = Expr(1) / A[r][col];
    for (std::size_t j = col; j < n; ++j) A[r][j] = A[r][j] * inv;
    b[r] = b[r] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][col].is_zero()) continue;
      Expr f = A[i][col];
      for (std::size_t j = col; j < n; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_row[col] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  *deficient = r < n;
  std::vector<Expr> c(n, Expr(0));
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_row[col] >= 0) c[col] = b[pivot_row[col]];
  }
  return c;
}

}  // namespace

VectorField commutator(const VectorField& X, const VectorField& Y) {
  auto xc = X.coeffs();
  auto yc = Y.coeffs();
  Expr out[4];
  for (int i = 0; i < 4; ++i) {
    out[i] = apply_field(X, *yc[i]) - apply_field(Y, *xc[i]);
  }
  return {out[0], out[1], out[2], out[3], ""};
}

std::optional<Decomposition> decompose(const VectorField& v,
                                       const std::vector<VectorField>& basis) {
  std::size_t n = basis.size();
  if (v.is_zero()) {
    return Decomposition{std::vector<Expr>(n, Expr(0)), false};
  }
  if (n == 0) return std::nullopt;
  std::vector<std::vector<Expr>> A;
  std::vector<Expr> b;
  int points = static_cast<int>(n) + 2;
  for (int k = 0; k < points; ++k) {
    SubstMap at = sample_point(k);
    auto vc = v.coeffs();
    for (int comp = 0; comp < 4; ++comp) {
      std::vector<Expr> row;
      try {
        for (const auto& X : basis) row.push_back(substitute(*X.coeffs()[comp], at));
        b.push_back(substitute(*vc[comp], at));
      } catch (const DivisionByZero&) {
        b.resize(A.size());
        continue;
      }
      A.push_back(std::move(row));
    }
  }
  bool deficient = false;
  auto c = solve(A, b, n, &deficient);
  if (!c) return std::nullopt;
  VectorField sum{Expr(0), Expr(0), Expr(0), Expr(0), ""};
  for (std::size_t k = 0; k < n; ++k) {
    if (!is_structure_constant((*c)[k])) return std::nullopt;
    sum = sum + basis[k].scaled((*c)[k]);
  }
  if (!sum.equals(v)) return std::nullopt;
  return Decomposition{std::move(*c), deficient};
}

ClosureReport closure_check(const std::vector<VectorField>& ops) {
  ClosureReport rep;
  std::size_t n = ops.size();
  rep.constants.assign(n, std::vector<std::vector<Expr>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      VectorField br = commutator(ops[i], ops[j]);
      auto d = decompose(br, ops);
      if (!d) {
        rep.closes = false;
        rep.fail_i = static_cast<int>(i);
        rep.fail_j = static_cast<int>(j);
        rep.residual = br;
        return rep;
      }
      rep.degenerate = rep.degenerate || d->degenerate;
      rep.constants[i][j] = std::move(d->coeffs);
    }
  }
  return rep;
}

bool ClosureReport::abelian() const {
  if (!closes) return false;
  for (const auto& row : constants) {
    for (const auto& cs : row) {
      for (const auto& c : cs) {
        if (!c.is_zero()) return false;
      }
    }
  }
  return true;
}

std::string ClosureReport::str(const std::vector<VectorField>& ops) const {
  auto name = [&](std::size_t k) {
    return ops[k].name.empty() ? "X" + std::to_string(k + 1) : ops[k].name;
  };
  std::ostringstream os;
  if (!closes) {
    os << "not closed: [" << name(fail_i) << ", " << name(fail_j)
       << "] outside the span\n"
       << residual.str();
    return os.str();
  }
  for (std::size_t i = 0; i < constants.size(); ++i) {
    for (std::size_t j = i + 1; j < constants.size(); ++j) {
      os << "[" << name(i) << ", " << name(j) << "] = ";
      std::string terms;
      for (std::size_t k = 0; k < constants[i][j].size(); ++k) {
        const Expr& c = constants[i][j][k];
        if (c.is_zero()) continue;
        if (!terms.empty()) terms += " + ";
        terms += "(" + c.str() + ")*" + name(k);
      }
      os << (terms.empty() ? "0" : terms) << "\n";
    }
  }
  if (degenerate) os << "note: sampled system was rank deficient\n";
  return os.str();
}

}  // namespace symkit
