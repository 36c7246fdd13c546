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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.h"
#include "wlc/hypergeometric.h"
#include "wlc/theta.h"

namespace wlc {
namespace {

using cplx = std::complex<double>;

TEST(Triangle, Classification) {
  EXPECT_EQ((TriangleData{2, 3, 7}).type(), TriangleType::kHyperbolic);
  EXPECT_EQ((TriangleData{2, 3, 6}).type(), TriangleType::kParabolic);
  EXPECT_EQ((TriangleData{2, 4, 4}).type(), TriangleType::kParabolic);
  EXPECT_EQ((TriangleData{3, 3, 3}).type(), TriangleType::kParabolic);
  EXPECT_EQ((TriangleData{2, 3, 5}).type(), TriangleType::kElliptic);
  EXPECT_EQ((TriangleData{2, 2, 100}).type(), TriangleType::kElliptic);
  EXPECT_EQ((TriangleData{std::nullopt, std::nullopt, std::nullopt}).type(),
            TriangleType::kHyperbolic);
  EXPECT_EQ((TriangleData{2, 2, std::nullopt}).type(), TriangleType::kParabolic);
  EXPECT_EQ(to_string(TriangleType::kElliptic), "elliptic");
  EXPECT_THROW((TriangleData{1, 3, 7}).validate(), Error);
  EXPECT_NO_THROW((TriangleData{2, std::nullopt, 7}).validate());
}

TEST(Triangle, Parameters) {
  const HGParams p = params_from_indices({2, 3, 7});
  EXPECT_NEAR(p.a, 13.0 / 84, 1e-15);
  EXPECT_NEAR(p.b, 1.0 / 84, 1e-15);
  EXPECT_NEAR(p.c, 0.5, 1e-15);
  // All three cusps: the lambda triangle, F = 2F1(1/2, 1/2; 1; x).
  const HGParams q = params_from_indices({std::nullopt, std::nullopt, std::nullopt});
  EXPECT_EQ(q.a, 0.5);
  EXPECT_EQ(q.b, 0.5);
  EXPECT_EQ(q.c, 1);
}

TEST(Series, ClosedForms) {
  for (double x : {-0.9, -0.3, 0.0, 0.2, 0.5, 0.8, 0.99}) {
    const double log_form = x == 0 ? 1.0 : -std::log1p(-x) / x;
    EXPECT_NEAR(gauss_2f1({1, 1, 2}, x).real(), log_form, 1e-13 * log_form) << x;
    EXPECT_NEAR(gauss_2f1({0.7, 1.3, 1.3}, x).real(), std::pow(1 - x, -0.7), 1e-12) << x;
  }
  for (double x : {0.1, 0.5, 0.9}) {
    const double k = 2 / std::numbers::pi * std::comp_ellint_1(std::sqrt(x));
    EXPECT_NEAR(gauss_2f1({0.5, 0.5, 1}, x).real(), k, 1e-13) << x;
  }
  EXPECT_NEAR(gauss_2f1({1, 1, 2}, 0.5).real(), 1.3862943611198906, 1e-15);
}

TEST(Series, ComplexArgumentsAgainstDirectSum) {
  for (cplx x : {cplx(0.3, 0.4), cplx(-0.6, 0.1), cplx(0, -0.8)}) {
    const cplx want = oracle::series_2f1(13.0 / 84, 1.0 / 84, 0.5, x, 600);
    EXPECT_LT(std::abs(gauss_2f1({13.0 / 84, 1.0 / 84, 0.5}, x) - want), 1e-14) << x;
  }
}

TEST(Series, DomainAndPoles) {
  try {
    gauss_2f1({1, 1, 2}, 0.9995);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfDomain);
  }
  try {
    gauss_2f1({1, 1, -2}, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParameterPole);
  }
  // A terminating series is a polynomial: 2F1(-2, 1; 1; x) = (1 - x)^2.
  EXPECT_NEAR(gauss_2f1({-2, 1, 1}, 0.3).real(), 0.49, 1e-15);
}

TEST(Schwarz, CentreAndRoundTrip) {
  const cplx centre = schwarz_map_inf(0.5);
  EXPECT_LT(std::abs(centre - cplx(0, 1)), 1e-15);
  for (int k = 1; k <= 19; ++k) {
    const double x = 0.05 * k;
    const cplx tau = schwarz_map_inf(x);
    // Elliptic-integral form of the same quotient.
    const double want = std::comp_ellint_1(std::sqrt(x)) / std::comp_ellint_1(std::sqrt(1 - x));
    EXPECT_NEAR(tau.imag(), want, 1e-13 * want);
    EXPECT_NEAR(tau.real(), 0, 1e-15);
    EXPECT_LT(std::abs(oracle::brute_lambda(tau, 60) - x), 1e-10) << x;
    EXPECT_LT(std::abs(modular_lambda(tau) - x), 1e-10) << x;
  }
  EXPECT_THROW(schwarz_map_inf(0), Error);
  EXPECT_THROW(schwarz_map_inf(1.2), Error);
}

}  // namespace
}  // namespace wlc
