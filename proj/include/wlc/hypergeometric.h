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

#ifndef WLC_HYPERGEOMETRIC_H_
#define WLC_HYPERGEOMETRIC_H_

// Gauss hypergeometric series, triangle indices to (a, b, c), and the
// Schwarz map of E(1/2, 1/2, 1).

#include <complex>
#include <optional>
#include <string>

namespace wlc {

// A triangle angle index: an integer >= 2, or infinity (nullopt).
using TriangleIndex = std::optional<int>;

enum class TriangleType { kElliptic, kParabolic, kHyperbolic };

struct TriangleData {
  TriangleIndex p, q, r;

  // Throws kParse unless every finite index is >= 2.
  void validate() const;
  // By comparing 1/p + 1/q + 1/r with 1, exactly.
  TriangleType type() const;
};

std::string to_string(TriangleType t);

struct HGParams {
  double a = 0, b = 0, c = 0;
};

// c = 1 - 1/p, a + b = c - 1/q, a - b = 1/r.
HGParams params_from_indices(const TriangleData& t);

inline constexpr double kHypergeometricDomain = 1 - 1e-3;

// Power series 2F1(a, b; c; x) with a ratio-bounded tail below eps.
// Throws kOutOfDomain for |x| > 1 - 1e-3, kParameterPole when c is a
// nonpositive integer.
std::complex<double> gauss_2f1(const HGParams& params, std::complex<double> x,
                               double eps = 1e-15);

// tau = i F(x) / F(1 - x) with F = 2F1(1/2, 1/2; 1; .), so that
// modular_lambda(tau) = x. Throws kOutOfDomain unless 0 < x < 1 with both
// x and 1 - x inside the series domain.
std::complex<double> schwarz_map_inf(double x, double eps = 1e-15);

}  // namespace wlc

#endif  // WLC_HYPERGEOMETRIC_H_
