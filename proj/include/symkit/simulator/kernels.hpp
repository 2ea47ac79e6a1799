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

// Inner loops of the method-of-lines solver. The scalar and AVX2 variants
// evaluate every expression in the same order without contraction, so their
// results are bitwise identical.

#pragma once

namespace symkit::sim {

struct Coeffs {
  double d1 = 0, d2 = 0, d11 = 0, d12 = 0, d21 = 0, d22 = 0;
  double a1 = 0, a2 = 0, b1 = 0, b2 = 0, c1 = 0, c2 = 0;
};

struct KernelOps {
  const char* name;
  // Composite fields P = (d1 + d11 u + d12 v) u and Q = (d2 + d21 u + d22 v) v
  // over m cells.
  void (*composite)(const Coeffs& c, const double* u, const double* v, int m,
                    double* P, double* Q);
  // du_i = (P_{i-1} - 2 P_i + P_{i+1}) / h^2 + u_i (a1 - b1 u_i - c1 v_i),
  // i = 0..n-1; P, Q are read at i-1 and i+1.
  void (*rhs)(const Coeffs& c, const double* u, const double* v,
              const double* P, const double* Q, int n, double inv_h2,
              double* du, double* dv);
  // max |d1+2 d11 u+d12 v|, |d2+d21 u+2 d22 v|, |d12 u|, |d21 v|.
  double (*max_diffusivity)(const Coeffs& c, const double* u, const double* v,
                            int n);
  // out = y + a k
  void (*axpy)(const double* y, double a, const double* k, double* out, int n);
  // out = y + dt6 ((k1 + 2 k2) + 2 k3 + k4)
  void (*rk4_combine)(const double* y, const double* k1, const double* k2,
                      const double* k3, const double* k4, double dt6,
                      double* out, int n);
};

const KernelOps& scalar_kernels();
// Only callable when avx2_available().
const KernelOps& avx2_kernels();
bool avx2_available();

enum class KernelChoice { kAuto, kScalar, kAvx2 };

// kAuto picks AVX2 when the CPU supports it, unless SYMKIT_SIMD=scalar.
// kAvx2 on a CPU without AVX2 throws DomainError.
const KernelOps& select_kernels(KernelChoice choice = KernelChoice::kAuto);

}  // namespace symkit::sim
