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

#include "wlc/hypergeometric.h"

#include <cmath>
#include <cstdint>

#include "wlc/error.h"
#include "wlc/summation.h"

namespace wlc {

void TriangleData::validate() const {
  for (const TriangleIndex& k : {p, q, r})
    if (k && *k < 2)
      throw Error(ErrorCode::kParse, "triangle index must be >= 2 or inf, got " +
                                         std::to_string(*k));
}

TriangleType TriangleData::type() const {
  validate();
  // Compare sum of 1/k over finite k with 1 using integers.
  std::int64_t num = 0, den = 1;
  for (const TriangleIndex& k : {p, q, r}) {
    if (!k) continue;
    num = num * *k + den;
    den *= *k;
  }
  if (num > den) return TriangleType::kElliptic;
  if (num == den) return TriangleType::kParabolic;
  return TriangleType::kHyperbolic;
}

std::string to_string(TriangleType t) {
  switch (t) {
    case TriangleType::kElliptic: return "elliptic";
    case TriangleType::kParabolic: return "parabolic";
    case TriangleType::kHyperbolic: return "hyperbolic";
  }
  return "?";
}

HGParams params_from_indices(const TriangleData& t) {
  t.validate();
  auto inv = [](const TriangleIndex& k) { return k ? 1.0 / *k : 0.0; };
  const double c = 1 - inv(t.p);
  const double sum = c - inv(t.q);
  const double diff = inv(t.r);
  return {(sum + diff) / 2, (sum - diff) / 2, c};
}

std::complex<double> gauss_2f1(const HGParams& params, std::complex<double> x, double eps) {
  const auto [a, b, c] = params;
  if (!(std::abs(x) <= kHypergeometricDomain))
    throw Error(ErrorCode::kOutOfDomain, "|x| must be <= 1 - 1e-3 for the series");
  if (c <= 0 && c == std::round(c))
    throw Error(ErrorCode::kParameterPole, "c is a nonpositive integer");
  const double ax = std::abs(x);
  CompensatedComplexSum sum;
  std::complex<double> term = 1;
  constexpr std::int64_t kMaxTerms = 50'000'000;
  for (std::int64_t n = 0; n < kMaxTerms; ++n) {
    sum.add(term);
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1)) * x;
    if (term == 0.0) break;
    // For k >= n + 1 > |c| the ratio |t_{k+1} / t_k| is at most q below.
    const double k = dn + 1;
    if (k <= std::abs(c)) continue;
    const double q = ax * (1 + std::abs(a) / k) * (1 + std::abs(b) / k) / (1 - std::abs(c) / k);
    if (q < 1 && std::abs(term) / (1 - q) < eps) {
      sum.add(term);
      break;
    }
  }
  return sum.value();
}

std::complex<double> schwarz_map_inf(double x, double eps) {
  if (!(x > 0 && x < 1))
    throw Error(ErrorCode::kOutOfDomain, "schwarz map needs 0 < x < 1");
  const HGParams half{0.5, 0.5, 1.0};
  const std::complex<double> num = gauss_2f1(half, x, eps);
  const std::complex<double> den = gauss_2f1(half, 1 - x, eps);
  return std::complex<double>(0, 1) * (num / den);
}

}  // namespace wlc
