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
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.h"
#include "wlc/theta.h"

namespace wlc {
namespace {

using std::complex;

GaussHalf half(int re, int im) { return GaussHalf(GaussInt(re, im)); }
const GaussHalf h0 = half(0, 0), h = half(1, -1);

ThetaChar ch(GaussHalf a1, GaussHalf a2, GaussHalf b1, GaussHalf b2) {
  return ThetaChar{{a1, a2}, {b1, b2}};
}

std::vector<Point> points(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> side(-1, 1), height(0.5, 2);
  std::vector<Point> out;
  for (int k = 0; k < n; ++k) out.emplace_back(cplx(side(rng), side(rng)), height(rng));
  return out;
}

TEST(Jacobi, MatchesDirectSums) {
  for (cplx tau : {cplx(0, 1), cplx(0.3, 0.8), cplx(-0.5, 0.9), cplx(0.1, 2.5)}) {
    for (JacobiKind kind : {JacobiKind::k00, JacobiKind::k01}) {
      const cplx want = oracle::brute_jacobi(kind == JacobiKind::k01, tau, 40);
      EXPECT_LT(std::abs(jacobi_theta(kind, tau) - want), 1e-14) << tau;
    }
  }
  EXPECT_THROW(jacobi_theta(JacobiKind::k00, cplx(0.2, 0)), Error);
}

TEST(Lambda, AtI) { EXPECT_NEAR(std::abs(modular_lambda(cplx(0, 1)) - 0.5), 0, 1e-12); }

TEST(Lambda, MatchesRatioOfDirectSums) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> x(-0.5, 0.5), y(0.9, 3);
  for (int k = 0; k < 50; ++k) {
    const cplx tau(x(rng), y(rng));
    const cplx want = oracle::brute_lambda(tau, 40);
    ASSERT_LT(std::abs(modular_lambda(tau) - want), 1e-12 * std::abs(want)) << tau;
  }
}

TEST(Lambda, TransformationRules) {
  // Shifting by one swaps the two Jacobi constants; inversion exchanges
  // theta01 with theta10.
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> x(-0.5, 0.5), y(0.9, 2);
  for (int k = 0; k < 50; ++k) {
    const cplx tau(x(rng), y(rng));
    const cplx l = oracle::brute_lambda(tau, 40);
    ASSERT_LT(std::abs(modular_lambda(tau + 1.0) - 1.0 / l), 1e-11);
    ASSERT_LT(std::abs(modular_lambda(tau + 2.0) - l), 1e-11);
    ASSERT_LT(std::abs(modular_lambda(-1.0 / tau) - (1.0 - l)), 1e-11);
  }
}

TEST(Lambda, DeepInTheCuspAndNearTheAxis) {
  EXPECT_LT(std::abs(modular_lambda(cplx(0, 5)) - 1.0), 1e-5);
  EXPECT_LT(std::abs(modular_lambda(cplx(0, 0.2))), 1e-5);
  // Points close to the real axis still evaluate through reduction.
  const cplx tau(0.3, 0.01);
  const cplx l = modular_lambda(tau);
  EXPECT_TRUE(std::isfinite(l.real()) && std::isfinite(l.imag()));
  EXPECT_THROW(modular_lambda(cplx(0.3, -0.1)), Error);
}

TEST(Characteristics, SixteenOfLevelOnePlusI) {
  const auto chars = level_one_plus_i_characteristics();
  ASSERT_EQ(chars.size(), 16u);
  EXPECT_EQ(std::set<ThetaChar>(chars.begin(), chars.end()).size(), 16u);
  for (const ThetaChar& c : chars) EXPECT_TRUE(c.is_level_one_plus_i());
  EXPECT_FALSE(ch(half(1, 0), h0, h0, h0).is_level_one_plus_i());
  // (1+i)/2 = (1-i)/2 + i.
  EXPECT_TRUE(ch(half(1, 1), h0, h0, h0).is_level_one_plus_i());
  EXPECT_EQ(to_string(ch(h0, h, h, h0)), "(0+0i)/2,(1-1i)/2;(1-1i)/2,(0+0i)/2");
}

TEST(TauMat, Validation) {
  EXPECT_THROW(TauMat(cplx(0, -1), 0, 0, cplx(0, 1)), Error);
  EXPECT_THROW(TauMat(cplx(0, 1), cplx(0, 2), cplx(0, 2), cplx(0, 1)), Error);
  const TauMat t = TauMat::from_point(Point(cplx(0.5, 0.25), 2));
  const HermMat y = t.imag_part();
  EXPECT_NEAR(y.x11, (0.3125 + 4) / 2, 1e-15);
  EXPECT_NEAR(y.x22, 0.5, 1e-15);
  EXPECT_NEAR(std::abs(y.x12 - cplx(0.25, 0.125)), 0, 1e-15);
  EXPECT_NEAR(y.det(), 1, 1e-14);
  const HermMat x = t.real_part();
  EXPECT_EQ(x.x11, 0);
  EXPECT_EQ(x.x22, 0);
}

TEST(Siegel, AgreesWithBruteForceBox) {
  const auto chars = level_one_plus_i_characteristics();
  const auto taus = spread_sample_taus(8, 11);
  int k = 0;
  for (const TauMat& tau : taus) {
    const ThetaChar& c = chars[(5 * k++) % 16];
    const cplx want = oracle::brute_siegel(c, tau, 7);
    const cplx got = siegel_theta(c, tau, 1e-13);
    ASSERT_LT(std::abs(got - want), 1e-11 * std::max(1.0, std::abs(want))) << to_string(c);
  }
  // Non-level-(1+i) characteristics too.
  const ThetaChar odd = ch(half(1, 0), half(0, 1), half(1, 1), half(1, 0));
  const cplx want = oracle::brute_siegel(odd, taus[0], 7);
  EXPECT_LT(std::abs(siegel_theta(odd, taus[0], 1e-13) - want), 1e-11);
}

TEST(Siegel, ReducedBasisMatchesRawBox) {
  // A skewed imaginary part, where the raw box converges slowly.
  const TauMat tau = TauMat::from_point(Point(cplx(1.7, -0.9), 0.8));
  const auto chars = level_one_plus_i_characteristics();
  for (const ThetaChar& c : chars) {
    const auto reduced = siegel_theta_detailed(c, tau, 1e-13);
    const auto raw = siegel_theta_detailed(c, tau, 1e-13, ThetaOptions{64, false});
    ASSERT_LT(std::abs(reduced.value - raw.value), 1e-12);
    EXPECT_LE(reduced.terms, raw.terms);
    EXPECT_LE(reduced.tail_bound, 1e-13);
  }
}

TEST(Siegel, TailBoundDominatesOmittedMass) {
  const auto chars = level_one_plus_i_characteristics();
  const auto taus = spread_sample_taus(6, 12);
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const ThetaChar& c = chars[(3 * k + 1) % 16];
    for (int R : {2, 3, 4}) {
      const double bound = theta_tail_bound(taus[k], c, R);
      const double mass = oracle::brute_tail(c, taus[k], R, 9);
      ASSERT_LE(mass, bound) << "R=" << R;
    }
  }
  EXPECT_THROW(theta_tail_bound(taus[0], chars[0], 1), Error);
}

TEST(Siegel, RadiusOverflowIsReported) {
  try {
    siegel_theta(level_one_plus_i_characteristics()[0], TauMat::imaginary_diagonal(1e-5, 1),
                 1e-12, ThetaOptions{8, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncationRadiusOverflow);
  }
}

TEST(Realness, AllSixteenCharacteristicsAreReal) {
  for (const Point& p : points(40, 13)) {
    for (const ThetaChar& c : level_one_plus_i_characteristics()) {
      ASSERT_LT(std::abs(theta_on_h3_complex(c, p, 1e-12).imag()), 1e-10) << to_string(c);
    }
  }
}

TEST(Realness, LiteralShiftedFormIsNotReal) {
  // (n + a) tau (n + b)^* instead of (n + a) tau (n + a)^*: the imaginary
  // part is visible at ordinary points, which is what the realness check
  // is there to catch.
  const TauMat tau = TauMat::from_point(Point(cplx(0.3, 0.2), 0.9));
  double worst = 0;
  for (const ThetaChar& c : level_one_plus_i_characteristics()) {
    worst = std::max(worst, std::abs(oracle::brute_literal(c, tau, 5).imag()));
  }
  EXPECT_GT(worst, 1e-3);
}

TEST(Realness, RejectsOtherCharacteristics) {
  try {
    theta_on_h3(ch(half(1, 0), h0, h0, h0), Point(0, 1), 1e-12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidCharacteristic);
  }
}

TEST(Vanishing, SixOddAndTenEven) {
  int odd = 0;
  for (const ThetaChar& c : level_one_plus_i_characteristics()) {
    const bool v = is_vanishing_characteristic(c, 6);
    odd += v;
    if (c == ch(h0, h0, h0, h0)) EXPECT_FALSE(v);
  }
  EXPECT_EQ(odd, 6);
}

TEST(Symplectic, TransformBasics) {
  const TauMat tau = spread_sample_taus(1, 3)[0];
  const TauMat same = tau_transform(GMat4::identity(), tau);
  for (int k = 0; k < 4; ++k) EXPECT_LT(std::abs(same.entries()[k] - tau.entries()[k]), 1e-14);

  // J4 sends tau to -tau^{-1}; applying it twice is the identity.
  const GMat4 j = GMat4::j4();
  EXPECT_TRUE(j.is_symplectic_unitary());
  const TauMat inv = tau_transform(j, tau);
  const cplx det = tau(0, 0) * tau(1, 1) - tau(0, 1) * tau(1, 0);
  EXPECT_LT(std::abs(inv(0, 0) + tau(1, 1) / det), 1e-13);
  EXPECT_LT(std::abs(inv(0, 1) - tau(0, 1) / det), 1e-13);
  const TauMat back = tau_transform(j * j, tau);
  for (int k = 0; k < 4; ++k) EXPECT_LT(std::abs(back.entries()[k] - tau.entries()[k]), 1e-13);

  // Translation by an integral Hermitian B.
  const GMat2 b(1, GaussInt(1, 1), GaussInt(1, -1), 0);
  const GMat4 shift = GMat4::from_blocks(GMat2::identity(), b, GMat2(), GMat2::identity());
  EXPECT_TRUE(shift.is_symplectic_unitary());
  const TauMat moved = tau_transform(shift, tau);
  EXPECT_LT(std::abs(moved(0, 1) - tau(0, 1) - cplx(1, 1)), 1e-14);
  EXPECT_LT(std::abs(moved(0, 0) - tau(0, 0) - 1.0), 1e-14);

  GMat4 bad = GMat4::identity();
  bad(0, 0) = 2;
  try {
    tau_transform(bad, tau);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSymplectic);
  }
}

}  // namespace
}  // namespace wlc
