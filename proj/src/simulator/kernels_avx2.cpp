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

// Built with -mavx2 (no FMA); only reached after a runtime CPU check.

#include "symkit/simulator/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#include <cmath>

namespace symkit::sim {

namespace {

inline __m256d abs4(__m256d x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

void composite(const Coeffs& c, const double* u, const double* v, int m,
               double* P, double* Q) {
  const __m256d d1 = _mm256_set1_pd(c.d1), d11 = _mm256_set1_pd(c.d11),
                d12 = _mm256_set1_pd(c.d12), d2 = _mm256_set1_pd(c.d2),
                d21 = _mm256_set1_pd(c.d21), d22 = _mm256_set1_pd(c.d22);
  int i = 0;
  for (; i + 4 <= m; i += 4) {
    __m256d U = _mm256_loadu_pd(u + i);
    __m256d V = _mm256_loadu_pd(v + i);
    __m256d p = _mm256_add_pd(_mm256_add_pd(d1, _mm256_mul_pd(d11, U)),
                              _mm256_mul_pd(d12, V));
    __m256d q = _mm256_add_pd(_mm256_add_pd(d2, _mm256_mul_pd(d21, U)),
                              _mm256_mul_pd(d22, V));
    _mm256_storeu_pd(P + i, _mm256_mul_pd(p, U));
    _mm256_storeu_pd(Q + i, _mm256_mul_pd(q, V));
  }
  for (; i < m; ++i) {
    P[i] = ((c.d1 + c.d11 * u[i]) + c.d12 * v[i]) * u[i];
    Q[i] = ((c.d2 + c.d21 * u[i]) + c.d22 * v[i]) * v[i];
  }
}

void rhs(const Coeffs& c, const double* u, const double* v, const double* P,
         const double* Q, int n, double inv_h2, double* du, double* dv) {
  const __m256d two = _mm256_set1_pd(2.0), ih = _mm256_set1_pd(inv_h2);
  const __m256d a1 = _mm256_set1_pd(c.a1), b1 = _mm256_set1_pd(c.b1),
                c1 = _mm256_set1_pd(c.c1), a2 = _mm256_set1_pd(c.a2),
                b2 = _mm256_set1_pd(c.b2), c2 = _mm256_set1_pd(c.c2);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d U = _mm256_loadu_pd(u + i);
    __m256d V = _mm256_loadu_pd(v + i);
    __m256d lp = _mm256_mul_pd(
        _mm256_add_pd(_mm256_sub_pd(_mm256_loadu_pd(P + i - 1),
                                    _mm256_mul_pd(two, _mm256_loadu_pd(P + i))),
                      _mm256_loadu_pd(P + i + 1)),
        ih);
    __m256d lq = _mm256_mul_pd(
        _mm256_add_pd(_mm256_sub_pd(_mm256_loadu_pd(Q + i - 1),
                                    _mm256_mul_pd(two, _mm256_loadu_pd(Q + i))),
                      _mm256_loadu_pd(Q + i + 1)),
        ih);
    __m256d ru = _mm256_sub_pd(_mm256_sub_pd(a1, _mm256_mul_pd(b1, U)),
                               _mm256_mul_pd(c1, V));
    __m256d rv = _mm256_sub_pd(_mm256_sub_pd(a2, _mm256_mul_pd(b2, U)),
                               _mm256_mul_pd(c2, V));
    _mm256_storeu_pd(du + i, _mm256_add_pd(lp, _mm256_mul_pd(U, ru)));
    _mm256_storeu_pd(dv + i, _mm256_add_pd(lq, _mm256_mul_pd(V, rv)));
  }
  for (; i < n; ++i) {
    double lp = ((P[i - 1] - 2.0 * P[i]) + P[i + 1]) * inv_h2;
    double lq = ((Q[i - 1] - 2.0 * Q[i]) + Q[i + 1]) * inv_h2;
    du[i] = lp + u[i] * ((c.a1 - c.b1 * u[i]) - c.c1 * v[i]);
    dv[i] = lq + v[i] * ((c.a2 - c.b2 * u[i]) - c.c2 * v[i]);
  }
}

double max_diffusivity(const Coeffs& c, const double* u, const double* v,
                       int n) {
  const __m256d d1 = _mm256_set1_pd(c.d1), d11x2 = _mm256_set1_pd(2.0 * c.d11),
                d12 = _mm256_set1_pd(c.d12), d2 = _mm256_set1_pd(c.d2),
                d21 = _mm256_set1_pd(c.d21), d22x2 = _mm256_set1_pd(2.0 * c.d22);
  __m256d acc = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d U = _mm256_loadu_pd(u + i);
    __m256d V = _mm256_loadu_pd(v + i);
    __m256d e1 = abs4(_mm256_add_pd(_mm256_add_pd(d1, _mm256_mul_pd(d11x2, U)),
                                    _mm256_mul_pd(d12, V)));
    __m256d e2 = abs4(_mm256_add_pd(_mm256_add_pd(d2, _mm256_mul_pd(d21, U)),
                                    _mm256_mul_pd(d22x2, V)));
    __m256d e3 = abs4(_mm256_mul_pd(d12, U));
    __m256d e4 = abs4(_mm256_mul_pd(d21, V));
    acc = _mm256_max_pd(acc, _mm256_max_pd(_mm256_max_pd(e1, e2),
                                           _mm256_max_pd(e3, e4)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double m = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) {
    double e1 = std::fabs((c.d1 + (2.0 * c.d11) * u[i]) + c.d12 * v[i]);
    double e2 = std::fabs((c.d2 + c.d21 * u[i]) + (2.0 * c.d22) * v[i]);
    double e3 = std::fabs(c.d12 * u[i]);
    double e4 = std::fabs(c.d21 * v[i]);
    m = std::fmax(m, std::fmax(std::fmax(e1, e2), std::fmax(e3, e4)));
  }
  return m;
}

void axpy(const double* y, double a, const double* k, double* out, int n) {
  const __m256d A = _mm256_set1_pd(a);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(y + i),
                                            _mm256_mul_pd(A, _mm256_loadu_pd(k + i))));
  }
  for (; i < n; ++i) out[i] = y[i] + a * k[i];
}

void rk4_combine(const double* y, const double* k1, const double* k2,
                 const double* k3, const double* k4, double dt6, double* out,
                 int n) {
  const __m256d two = _mm256_set1_pd(2.0), D = _mm256_set1_pd(dt6);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d s = _mm256_add_pd(_mm256_loadu_pd(k1 + i),
                              _mm256_mul_pd(two, _mm256_loadu_pd(k2 + i)));
    s = _mm256_add_pd(s, _mm256_mul_pd(two, _mm256_loadu_pd(k3 + i)));
    s = _mm256_add_pd(s, _mm256_loadu_pd(k4 + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(y + i),
                                            _mm256_mul_pd(D, s)));
  }
  for (; i < n; ++i) {
    out[i] = y[i] + dt6 * (((k1[i] + 2.0 * k2[i]) + 2.0 * k3[i]) + k4[i]);
  }
}

}  // namespace

const KernelOps& avx2_kernels() {
  static const KernelOps ops{"avx2", composite, rhs, max_diffusivity, axpy,
                             rk4_combine};
  return ops;
}

}  // namespace symkit::sim

#else

#include "symkit/error.hpp"

namespace symkit::sim {

const KernelOps& avx2_kernels() { throw DomainError("AVX2 kernels not built"); }

}  // namespace symkit::sim

#endif
