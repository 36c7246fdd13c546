// Copyright 2026 The WLC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WLC_TESTS_ORACLES_H_
#define WLC_TESTS_ORACLES_H_

// Deliberately naive reference implementations. They share no code with
// the library beyond value types.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "wlc/gaussian.h"
#include "wlc/halfspace.h"
#include "wlc/theta.h"

namespace wlc::oracle {

using C = std::complex<long double>;
constexpr long double kPiL = std::numbers::pi_v<long double>;

inline C to_c(const GaussHalf& h) {
  return C(h.num.re / 2.0L, h.num.im / 2.0L);
}

// exp(pi i [v tau v^* + 2 Re(n conj(b))]) with v = n + a, where the first
// quadratic term uses (n + a) on both sides.
inline C siegel_term(const ThetaChar& c, const TauMat& tau, const std::array<C, 2>& n) {
  const std::array<C, 2> v{n[0] + to_c(c.a[0]), n[1] + to_c(c.a[1])};
  C q = 0;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) q += v[j] * C(tau(j, k)) * std::conj(v[k]);
  const long double pair = 2 * std::real(n[0] * std::conj(to_c(c.b[0])) +
                                         n[1] * std::conj(to_c(c.b[1])));
  return std::exp(C(0, kPiL) * (q + pair));
}

// Same with the second factor shifted by b instead of a:
// exp(pi i [(n + a) tau (n + b)^* + 2 Re(n conj(b))]).
inline C literal_term(const ThetaChar& c, const TauMat& tau, const std::array<C, 2>& n) {
  const std::array<C, 2> v{n[0] + to_c(c.a[0]), n[1] + to_c(c.a[1])};
  const std::array<C, 2> w{n[0] + to_c(c.b[0]), n[1] + to_c(c.b[1])};
  C q = 0;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) q += v[j] * C(tau(j, k)) * std::conj(w[k]);
  const long double pair = 2 * std::real(n[0] * std::conj(to_c(c.b[0])) +
                                         n[1] * std::conj(to_c(c.b[1])));
  return std::exp(C(0, kPiL) * (q + pair));
}

// Visits every n in Z[i]^2 with integer coordinates in [-R, R].
template <typename F>
void for_box(int R, F f) {
  for (int a = -R; a <= R; ++a)
    for (int b = -R; b <= R; ++b)
      for (int c = -R; c <= R; ++c)
        for (int d = -R; d <= R; ++d) f(a, b, c, d);
}

inline std::complex<double> brute_siegel(const ThetaChar& c, const TauMat& tau, int R) {
  C sum = 0;
  for_box(R, [&](int a, int b, int cc, int d) {
    sum += siegel_term(c, tau, {C(a, b), C(cc, d)});
  });
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

inline std::complex<double> brute_literal(const ThetaChar& c, const TauMat& tau, int R) {
  C sum = 0;
  for_box(R, [&](int a, int b, int cc, int d) {
    sum += literal_term(c, tau, {C(a, b), C(cc, d)});
  });
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// Sum of |term| over R < max coordinate <= outer.
inline double brute_tail(const ThetaChar& c, const TauMat& tau, int R, int outer) {
  long double sum = 0;
  for_box(outer, [&](int a, int b, int cc, int d) {
    if (std::max({std::abs(a), std::abs(b), std::abs(cc), std::abs(d)}) <= R) return;
    sum += std::abs(siegel_term(c, tau, {C(a, b), C(cc, d)}));
  });
  return static_cast<double>(sum);
}

// sum_{|n| <= N} (+-1)^n exp(pi i tau n^2).
inline std::complex<double> brute_jacobi(bool alternating, std::complex<double> tau, int N) {
  C sum = 0;
  for (int n = -N; n <= N; ++n) {
    const C term = std::exp(C(0, kPiL) * C(tau) * static_cast<long double>(n * n));
    sum += (alternating && (n & 1)) ? -term : term;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

inline std::complex<double> brute_lambda(std::complex<double> tau, int N) {
  const std::complex<double> r = brute_jacobi(true, tau, N) / brute_jacobi(false, tau, N);
  return r * r * r * r;
}

// First `terms` terms of the hypergeometric series, in long double.
inline std::complex<double> series_2f1(double a, double b, double c, std::complex<double> x,
                                       int terms) {
  C sum = 0, term = 1;
  for (int n = 0; n < terms; ++n) {
    sum += term;
    term *= C((a + n) * (b + n) / ((c + n) * (n + 1.0L))) * C(x);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// g X g^* on the Hermitian model, renormalized to determinant one.
inline Point herm_act(const GMat2& g, const Point& p) {
  using M = std::array<std::complex<double>, 4>;
  const std::complex<double> z = p.z();
  const double t = p.t();
  const M x{(std::norm(z) + t * t) / t, z / t, std::conj(z) / t, 1.0 / t};
  const M m{g.a().to_complex(), g.b().to_complex(), g.c().to_complex(), g.d().to_complex()};
  auto mul = [](const M& u, const M& v) {
    return M{u[0] * v[0] + u[1] * v[2], u[0] * v[1] + u[1] * v[3],
             u[2] * v[0] + u[3] * v[2], u[2] * v[1] + u[3] * v[3]};
  };
  const M ms{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
  const M y = mul(mul(m, x), ms);
  const double det = (y[0] * y[3] - y[1] * y[2]).real();
  const double s = 1.0 / std::sqrt(det);
  return Point(y[1] / y[3], 1.0 / (y[3].real() * s));
}

inline GaussInt random_gauss(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return GaussInt(d(rng), d(rng));
}

}  // namespace wlc::oracle

#endif  // WLC_TESTS_ORACLES_H_
