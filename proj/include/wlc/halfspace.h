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

#ifndef WLC_HALFSPACE_H_
#define WLC_HALFSPACE_H_

// Real hyperbolic 3-space in the upper half-space model {(z, t) : t > 0} and
// as determinant-one positive Hermitian 2x2 matrices. The two are identified
// by
//
//   (z, t)  <->  (1/t) [[|z|^2 + t^2, z], [conj(z), 1]],
//
// under which g in GL(2, Z[i]) acts as X -> g X g^* and upper-triangular
// unipotent matrices act as horizontal translations.

#include <complex>
#include <string>

#include "wlc/gaussian.h"

namespace wlc {

using cplx = std::complex<double>;

// Points with t below this are rejected: every formula downstream divides
// by t.
inline constexpr double kMinHeight = 1e-12;

class Point {
 public:
  // Throws kInvalidPoint unless t >= kMinHeight and both coordinates are
  // finite.
  Point(cplx z, double t);

  const cplx& z() const { return z_; }
  double t() const { return t_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  cplx z_;
  double t_;
};

// [[x11, x12], [conj(x12), x22]].
struct HermMat {
  double x11 = 1.0;
  double x22 = 1.0;
  cplx x12{0.0, 0.0};

  double det() const { return x11 * x22 - std::norm(x12); }
  // Scaled to determinant one; throws kNotPositiveDefinite.
  HermMat normalized() const;
};

HermMat point_to_herm(const Point& p);
// Throws kNotPositiveDefinite for non-positive input.
Point herm_to_point(const HermMat& x);

// g X g^*, computed in floating point.
HermMat congruence(const GMat2& g, const HermMat& x);

// Isometric action of g (norm(det g) must be 1, else kNonUnitDeterminant).
Point act(const GMat2& g, const Point& p);

// Orientation-reversing involution X -> transpose(X), i.e. (z, t) -> (conj z, t).
Point transpose_action(const Point& p);

double hyp_distance(const Point& p, const Point& q);

// "(re,im,t)" with round-trip precision.
std::string to_string(const Point& p);

}  // namespace wlc

#endif  // WLC_HALFSPACE_H_
