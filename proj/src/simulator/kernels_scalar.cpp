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

#include <cmath>
#include <cstdlib>
#include <cstring>

#include "symkit/error.hpp"
#include "symkit/simulator/kernels.hpp"

namespace symkit::sim {

namespace {

void composite(const Coeffs& c, const double* u, const double* v, int m,
               double* P, double* Q) {
  for (int i = 0; i < m; ++i) {
    P[i] = ((c.d1 + c.d11 * u[i]) + c.d12 * v[i]) * u[i];
    Q[i] = ((c.d2 + c.d21 * u[i]) + c.d22 * v[i]) * v[i];
  }
}

void rhs(const Coeffs& c, const double* u, const double* v, const double* P,
         const double* Q, int n, double inv_h2, double* du, double* dv) {
  for (int i = 0; i < n; ++i) {
    double lp = ((P[i - 1] - 2.0 * P[i]) + P[i + 1]) * inv_h2;
    double lq = ((Q[i - 1] - 2.0 * Q[i]) + Q[i + 1]) * inv_h2;
    du[i] = lp + u[i] * ((c.a1 - c.b1 * u[i]) - c.c1 * v[i]);
    dv[i] = lq + v[i] * ((c.a2 - c.b2 * u[i]) - c.c2 * v[i]);
  }
}

double max_diffusivity(const Coeffs& c, const double* u, const double* v,
                       int n) {
  double m = 0;
  for (int i = 0; i < n; ++i) {
    double e1 = std::fabs((c.d1 + (2.0 * c.d11) * u[i]) + c.d12 * v[i]);
    double e2 = std::fabs((c.d2 + c.d21 * u[i]) + (2.0 * c.d22) * v[i]);
    double e3 = std::fabs(c.d12 * u[i]);
    double e4 = std::fabs(c.d21 * v[i]);
    m = std::fmax(m, std::fmax(std::fmax(e1, e2), std::fmax(e3, e4)));
  }
  return m;
}

void axpy(const double* y, double a, const double* k, double* out, int n) {
  for (int i = 0; i < n; ++i) out[i] = y[i] + a * k[i];
}

void rk4_combine(const double* y, const double* k1, const double* k2,
                 const double* k3, const double* k4, double dt6, double* out,
                 int n) {
  for (int i = 0; i < n; ++i) {
    out[i] = y[i] + dt6 * (((k1[i] + 2.0 * k2[i]) + 2.0 * k3[i]) + k4[i]);
  }
}

}  // namespace

const KernelOps& scalar_kernels() {
  static const KernelOps ops{"scalar", composite, rhs, max_diffusivity, axpy,
                             rk4_combine};
  return ops;
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelOps& select_kernels(KernelChoice choice) {
  switch (choice) {
    case KernelChoice::kScalar:
      return scalar_kernels();
    case KernelChoice::kAvx2:
      if (!avx2_available()) throw DomainError("CPU lacks AVX2");
      return avx2_kernels();
    case KernelChoice::kAuto:
      break;
  }
  const char* env = std::getenv("SYMKIT_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_kernels();
  return avx2_available() ? avx2_kernels() : scalar_kernels();
}

}  // namespace symkit::sim
