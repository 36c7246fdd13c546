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

#ifndef WLC_THETA_H_
#define WLC_THETA_H_

// Theta series.
//
// * Jacobi theta constants theta_00, theta_01 and the modular lambda
//   function lambda = (theta_01 / theta_00)^4 on the upper half-plane.
// * Theta series on the 2x2 Hermitian upper half-space with characteristics
//   (a, b) in ((1/2) Z[i])^2:
//
//     theta(a;b)(tau) = sum_{n in Z[i]^2}
//         exp(pi i [(n+a) tau (n+a)^* + 2 Re(n b^*)]),
//
//   evaluated with a certified truncation error.
// * The restriction to hyperbolic 3-space, tau = i X(p), where the series
//   is real valued.
// * The action of the unitary group {g : g J4 g^* = J4} over Z[i].

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "wlc/gaussian.h"
#include "wlc/halfspace.h"

namespace wlc {

enum class JacobiKind { k00, k01 };

// sum_n exp(pi i tau n^2), optionally with (-1)^n; tail below eps.
// Throws kNotInUpperHalfPlane when Im tau <= 0.
cplx jacobi_theta(JacobiKind kind, cplx tau, double eps = 1e-15);

// (theta_01(tau) / theta_00(tau))^4. Invariant under the level-2
// congruence subgroup of SL(2, Z); tends to 1 as tau -> i infinity and to
// 0 as tau -> 0 along the imaginary axis.
cplx modular_lambda(cplx tau, double eps = 1e-15);

// Characteristic pair (a, b); a and b are row vectors over (1/2) Z[i].
struct ThetaChar {
  std::array<GaussHalf, 2> a{};
  std::array<GaussHalf, 2> b{};

  friend bool operator==(const ThetaChar&, const ThetaChar&) = default;
  friend auto operator<=>(const ThetaChar&, const ThetaChar&) = default;

  // Every coordinate is congruent to 0 or (1-i)/2 modulo Z[i].
  bool is_level_one_plus_i() const;
  // Coordinates reduced to numerators in {0, 1}.
  ThetaChar normalized() const;
};

// "a1,a2;b1,b2" in the GaussHalf grammar.
std::string to_string(const ThetaChar& c);

// The 16 characteristics with every coordinate in {0, (1-i)/2}, in
// lexicographic order of (a1, a2, b1, b2) with 0 before (1-i)/2.
std::vector<ThetaChar> level_one_plus_i_characteristics();

// A point of H_{2x2}: a complex 2x2 matrix [[t11, t12], [t21, t22]] whose
// anti-Hermitian part Y = (tau - tau^*) / 2i is positive definite.
class TauMat {
 public:
  // Throws kNotPositiveDefinite.
  TauMat(cplx t11, cplx t12, cplx t21, cplx t22);

  // i X(p), the image of a point of hyperbolic 3-space.
  static TauMat from_point(const Point& p);
  // i * diag(y1, y2).
  static TauMat imaginary_diagonal(double y1, double y2);

  cplx operator()(int row, int col) const { return m_[2 * row + col]; }
  const std::array<cplx, 4>& entries() const { return m_; }

  // (tau - tau^*) / 2i.
  HermMat imag_part() const;
  // (tau + tau^*) / 2.
  HermMat real_part() const;

 private:
  std::array<cplx, 4> m_;
};

struct ThetaOptions {
  // Box radii above this raise kTruncationRadiusOverflow.
  int max_radius = 64;
  // Sum in a basis of Z[i]^2 in which Im tau is reduced. The box is then the
  // sup-norm box in the reduced coordinates.
  bool reduce_basis = true;
};

struct ThetaEvaluation {
  cplx value;
  // Sup-norm radius of the summation box (in the summation basis).
  int radius = 0;
  // Certified bound on the absolute mass of all omitted terms.
  double tail_bound = 0.0;
  // Rows span the summation basis of Z[i]^2.
  GMat2 basis = GMat2::identity();
  std::int64_t terms = 0;
};

// Evaluates the theta series with total truncation error below eps.
ThetaEvaluation siegel_theta_detailed(const ThetaChar& c, const TauMat& tau,
                                      double eps, const ThetaOptions& options = {});

cplx siegel_theta(const ThetaChar& c, const TauMat& tau, double eps,
                  const ThetaOptions& options = {});

// Same series summed over a fixed sup-norm box of the given radius (in the
// summation basis selected by options).
ThetaEvaluation siegel_theta_at_radius(const ThetaChar& c, const TauMat& tau,
                                       int radius, const ThetaOptions& options = {});

// Upper bound for sum |term| over all n with max integer coordinate > R:
//
//   sum_{k > R} 8 (2k+1)^3 exp(-pi lmin (k - rho)^2)
//     <= 8 (2R+3)^3 exp(-pi lmin (R+1-rho)^2) / (1 - q),
//
// where lmin is the least eigenvalue of Im tau, rho the largest coordinate
// of a in absolute value, and q the (decreasing) ratio of consecutive
// summands at k = R+1. Returns +infinity when the ratio is not yet below
// one. Requires R >= 2.
double theta_tail_bound(const TauMat& tau, const ThetaChar& c, int R);

// Real value on hyperbolic 3-space for a level-(1+i) characteristic
// (kInvalidCharacteristic otherwise). Throws kRealnessViolation when the
// imaginary part exceeds max(10 eps, 1e-9).
double theta_on_h3(const ThetaChar& c, const Point& p, double eps);

// Unchecked complex value at tau = i X(p), any characteristic.
cplx theta_on_h3_complex(const ThetaChar& c, const Point& p, double eps);

// Deterministic, widely spread sample points of H_{2x2}.
std::vector<TauMat> spread_sample_taus(int count, std::uint64_t seed);

// A characteristic is flagged odd (identically vanishing) when
// |theta| < 1e-12 at every one of `samples` spread points.
bool is_vanishing_characteristic(const ThetaChar& c, int samples = 20,
                                 std::uint64_t seed = 0x5eed);

// 4x4 matrix over Z[i] in 2x2 blocks [[A, B], [C, D]].
struct GMat4 {
  std::array<GaussInt, 16> e{};

  static GMat4 identity();
  // [[0, -I], [I, 0]].
  static GMat4 j4();
  static GMat4 from_blocks(const GMat2& A, const GMat2& B, const GMat2& C,
                           const GMat2& D);

  GaussInt& operator()(int r, int c) { return e[4 * r + c]; }
  const GaussInt& operator()(int r, int c) const { return e[4 * r + c]; }
  GMat2 block(int br, int bc) const;

  GMat4 conj_transpose() const;
  // g J4 g^* == J4, exactly.
  bool is_symplectic_unitary() const;

  friend bool operator==(const GMat4&, const GMat4&) = default;
};

GMat4 operator*(const GMat4& g, const GMat4& h);

// (A tau + B)(C tau + D)^{-1}. Throws kNotSymplectic, kSingularDenominator,
// or kNotPositiveDefinite if the image leaves H_{2x2}.
TauMat tau_transform(const GMat4& g, const TauMat& tau);

}  // namespace wlc

#endif  // WLC_THETA_H_
