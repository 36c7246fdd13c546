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

#include <gtest/gtest.h>

#include "oracles.h"
#include "wlc/groups.h"
#include "wlc/halfspace.h"

namespace wlc {
namespace {

const GaussInt I = kGaussI;

void expect_near(const Point& p, const Point& q, double tol) {
  EXPECT_NEAR(p.z().real(), q.z().real(), tol);
  EXPECT_NEAR(p.z().imag(), q.z().imag(), tol);
  EXPECT_NEAR(p.t(), q.t(), tol);
}

Point random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> side(-1, 1), height(0.3, 3);
  return Point(cplx(side(rng), side(rng)), height(rng));
}

TEST(Point, RejectsInvalidHeights) {
  for (double t : {0.0, -1.0, 1e-13, std::nan("")}) {
    try {
      Point(cplx(0, 0), t);
      FAIL() << t;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidPoint);
    }
  }
  EXPECT_THROW(Point(cplx(INFINITY, 0), 1), Error);
}

TEST(Hermitian, ModelIdentification) {
  HermMat x = point_to_herm(Point(0, 1));
  EXPECT_DOUBLE_EQ(x.x11, 1);
  EXPECT_DOUBLE_EQ(x.x22, 1);
  EXPECT_EQ(x.x12, cplx(0, 0));

  x = point_to_herm(Point(cplx(0, 1), 1));
  EXPECT_DOUBLE_EQ(x.x11, 2);
  EXPECT_DOUBLE_EQ(x.x22, 1);
  EXPECT_EQ(x.x12, cplx(0, 1));

  x = point_to_herm(Point(0, 2));
  EXPECT_DOUBLE_EQ(x.x11, 2);
  EXPECT_DOUBLE_EQ(x.x22, 0.5);

  expect_near(herm_to_point({1, 1, 0}), Point(0, 1), 1e-15);
  expect_near(herm_to_point({2, 1, cplx(0, 1)}), Point(cplx(0, 1), 1), 1e-15);
  // [[1, 1-i], [1+i, 3]] has determinant 1: z = (1-i)/3, t = 1/3.
  expect_near(herm_to_point({1, 3, cplx(1, -1)}), Point(cplx(1, -1) / 3.0, 1.0 / 3), 1e-15);
  // Scaling does not change the point.
  expect_near(herm_to_point({5, 15, cplx(5, -5)}), Point(cplx(1, -1) / 3.0, 1.0 / 3), 1e-15);

  EXPECT_THROW(herm_to_point({1, 1, cplx(2, 0)}), Error);
  EXPECT_THROW(herm_to_point({-1, -1, 0}), Error);
}

TEST(Hermitian, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 1000; ++k) {
    const Point p = random_point(rng);
    const HermMat x = point_to_herm(p);
    ASSERT_NEAR(x.det(), 1.0, 1e-12);
    const Point q = herm_to_point(x);
    ASSERT_NEAR(std::abs(q.z() - p.z()), 0, 1e-12);
    ASSERT_NEAR(q.t(), p.t(), 1e-12 * p.t());
  }
}

TEST(Action, Examples) {
  const Point p(cplx(0.3, -0.7), 0.4);
  expect_near(act(GMat2(1, I, 0, 1), p), Point(p.z() + cplx(0, 1), p.t()), 1e-15);
  expect_near(act(GMat2(I, 0, 0, I), p), p, 1e-15);
  expect_near(act(GMat2(1, 0, GaussInt(1, 1), 1), Point(0, 1)),
              Point(cplx(1, -1) / 3.0, 1.0 / 3), 1e-15);
  try {
    act(GMat2(2, 0, 0, 1), p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonUnitDeterminant);
  }
}

TEST(Action, MatchesHermitianCongruence) {
  std::mt19937_64 rng(2);
  const GroupSpec& gamma = group_spec("gamma");
  const auto elems = sample_elements(gamma, 300, 6, 3);
  for (const GroupElement& e : elems) {
    const Point p = random_point(rng);
    const Point a = act(e.matrix, p), b = oracle::herm_act(e.matrix, p);
    ASSERT_LT(hyp_distance(a, b), 1e-10) << to_string(e.matrix);
    const Point c = herm_to_point(congruence(e.matrix, point_to_herm(p)));
    ASSERT_LT(hyp_distance(a, c), 1e-9);
  }
}

TEST(Action, HomomorphismAndIsometry) {
  std::mt19937_64 rng(3);
  const GroupSpec& gamma = group_spec("gamma");
  const auto gs = sample_elements(gamma, 1000, 6, 4);
  const auto hs = sample_elements(gamma, 1000, 6, 5);
  for (std::size_t k = 0; k < gs.size(); ++k) {
    const Point p = random_point(rng), q = random_point(rng);
    const GMat2& g = gs[k].matrix;
    const GMat2& h = hs[k].matrix;
    ASSERT_LT(hyp_distance(act(g * h, p), act(g, act(h, p))), 1e-10);
    ASSERT_NEAR(hyp_distance(act(g, p), act(g, q)), hyp_distance(p, q), 1e-10);
  }
}

TEST(Transpose, Involution) {
  expect_near(transpose_action(Point(cplx(0, 1), 1)), Point(cplx(0, -1), 1), 0);
  const Point real(cplx(0.25, 0), 2);
  EXPECT_EQ(transpose_action(real), real);
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const Point p = random_point(rng), q = random_point(rng);
    ASSERT_EQ(transpose_action(transpose_action(p)), p);
    ASSERT_NEAR(hyp_distance(transpose_action(p), transpose_action(q)), hyp_distance(p, q),
                1e-14);
  }
}

TEST(Distance, Basics) {
  const Point p(cplx(0.1, 0.2), 0.7);
  EXPECT_EQ(hyp_distance(p, p), 0);
  EXPECT_NEAR(hyp_distance(Point(0, 1), Point(0, std::exp(1.0))), 1.0, 1e-15);
  // cosh d = 1 + (|dz|^2 + dt^2) / (2 t1 t2).
  const Point q(cplx(-0.4, 1.1), 2.5);
  const double c = 1 + (std::norm(p.z() - q.z()) + (p.t() - q.t()) * (p.t() - q.t())) /
                           (2 * p.t() * q.t());
  EXPECT_NEAR(hyp_distance(p, q), std::acosh(c), 1e-14);
}

}  // namespace
}  // namespace wlc
