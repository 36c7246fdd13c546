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

#include "wlc/halfspace.h"

#include <cmath>
#include <limits>
#include <sstream>

namespace wlc {

Point::Point(cplx z, double t) : z_(z), t_(t) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(t)) {
    throw Error(ErrorCode::kInvalidPoint, "non-finite coordinate");
  }
  if (!(t >= kMinHeight)) {
    std::ostringstream os;
    os << "height t = " << t << " must be at least " << kMinHeight;
    throw Error(ErrorCode::kInvalidPoint, os.str());
  }
}

HermMat HermMat::normalized() const {
  const double d = det();
  if (!(x11 > 0.0) || !(x22 > 0.0) || !(d > 0.0) || !std::isfinite(d)) {
    throw Error(ErrorCode::kNotPositiveDefinite,
                "Hermitian matrix is not positive definite");
  }
  const double s = 1.0 / std::sqrt(d);
  return {x11 * s, x22 * s, x12 * s};
}

HermMat point_to_herm(const Point& p) {
  const double inv_t = 1.0 / p.t();
  return {(std::norm(p.z()) + p.t() * p.t()) * inv_t, inv_t, p.z() * inv_t};
}

Point herm_to_point(const HermMat& x) {
  const HermMat n = x.normalized();
  return Point(n.x12 / n.x22, 1.0 / n.x22);
}

HermMat congruence(const GMat2& g, const HermMat& x) {
  const cplx a = g.a().to_complex(), b = g.b().to_complex();
  const cplx c = g.c().to_complex(), d = g.d().to_complex();
  const cplx x21 = std::conj(x.x12);
  // Rows of g X.
  const cplx r11 = a * x.x11 + b * x21, r12 = a * x.x12 + b * x.x22;
  const cplx r21 = c * x.x11 + d * x21, r22 = c * x.x12 + d * x.x22;
  HermMat out;
  out.x11 = (r11 * std::conj(a) + r12 * std::conj(b)).real();
  out.x12 = r11 * std::conj(c) + r12 * std::conj(d);
  out.x22 = (r21 * std::conj(c) + r22 * std::conj(d)).real();
  return out;
}

Point act(const GMat2& g, const Point& p) {
  const GaussInt det = g.det();
  if (!det.is_unit()) {
    throw Error(ErrorCode::kNonUnitDeterminant,
                "cannot act by " + to_string(g) + ": determinant " + to_string(det));
  }
  // Same as herm_to_point(congruence(g, point_to_herm(p))), written out so
  // that no determinant has to be recomputed: with q = cz + d and
  // D = |q|^2 + |c|^2 t^2, the image is (((az + b) conj(q) + a conj(c) t^2) / D, t / D).
  const cplx a = g.a().to_complex(), b = g.b().to_complex();
  const cplx c = g.c().to_complex(), d = g.d().to_complex();
  const cplx z = p.z();
  const double t = p.t();
  const cplx q = c * z + d;
  const double den = std::norm(q) + std::norm(c) * t * t;
  return Point(((a * z + b) * std::conj(q) + a * std::conj(c) * (t * t)) / den, t / den);
}

Point transpose_action(const Point& p) { return Point(std::conj(p.z()), p.t()); }

double hyp_distance(const Point& p, const Point& q) {
  // cosh d = 1 + (|dz|^2 + dt^2) / (2 t1 t2), rewritten as
  // d = 2 asinh(sqrt(|dz|^2 + dt^2) / (2 sqrt(t1 t2))) to keep small
  // distances accurate.
  const double dt = p.t() - q.t();
  const double chord = std::sqrt(std::norm(p.z() - q.z()) + dt * dt);
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.t() * q.t())));
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os.precision(std::numeric_limits<double>::max_digits10);
  os << "(" << p.z().real() << "," << p.z().imag() << "," << p.t() << ")";
  return os.str();
}

}  // namespace wlc
