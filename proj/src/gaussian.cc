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

#include "wlc/gaussian.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace wlc {
namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw Error(ErrorCode::kOverflow, "Gaussian integer addition overflow");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw Error(ErrorCode::kOverflow, "Gaussian integer subtraction overflow");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw Error(ErrorCode::kOverflow, "Gaussian integer multiplication overflow");
  }
  return r;
}

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

std::int64_t mod2(std::int64_t x) { return x & 1; }

enum class ModulusKind { kOnePlusI, kTwo };

ModulusKind classify_modulus(GaussInt m) {
  for (const GaussInt& u : kGaussUnits) {
    if (m == u * kOnePlusI) return ModulusKind::kOnePlusI;
    if (m == u * GaussInt{2, 0}) return ModulusKind::kTwo;
  }
  throw Error(ErrorCode::kUnsupportedModulus,
              "modulus " + to_string(m) + " is not 1+i or 2");
}

}  // namespace

std::int64_t GaussInt::norm() const {
  return checked_add(checked_mul(re, re), checked_mul(im, im));
}

bool GaussInt::is_unit() const {
  return (std::abs(re) + std::abs(im) == 1) && (re == 0 || im == 0);
}

GaussInt operator+(GaussInt x, GaussInt y) {
  return {checked_add(x.re, y.re), checked_add(x.im, y.im)};
}

GaussInt operator-(GaussInt x, GaussInt y) {
  return {checked_sub(x.re, y.re), checked_sub(x.im, y.im)};
}

GaussInt operator-(GaussInt x) { return GaussInt{0, 0} - x; }

GaussInt operator*(GaussInt x, GaussInt y) {
  return {checked_sub(checked_mul(x.re, y.re), checked_mul(x.im, y.im)),
          checked_add(checked_mul(x.re, y.im), checked_mul(x.im, y.re))};
}

GaussInt gi_mul(GaussInt x, GaussInt y) { return x * y; }

GaussInt divide_nearest(GaussInt x, GaussInt m) {
  if (m.is_zero()) throw Error(ErrorCode::kOutOfDomain, "division by zero");
  const GaussInt num = x * m.conj();
  const std::int64_t den = m.norm();
  // floor(n/d + 1/2) = floor((2n + d) / 2d)
  auto round_half_up = [den](std::int64_t n) {
    return floor_div(checked_add(checked_mul(2, n), den), checked_mul(2, den));
  };
  return {round_half_up(num.re), round_half_up(num.im)};
}

bool divides(GaussInt m, GaussInt x) {
  if (m.is_zero()) return x.is_zero();
  const GaussInt num = x * m.conj();
  const std::int64_t den = m.norm();
  return num.re % den == 0 && num.im % den == 0;
}

GaussInt divide_exact(GaussInt x, GaussInt m) {
  if (!divides(m, x) || m.is_zero()) {
    throw Error(ErrorCode::kOutOfDomain,
                to_string(m) + " does not divide " + to_string(x));
  }
  const GaussInt num = x * m.conj();
  const std::int64_t den = m.norm();
  return {num.re / den, num.im / den};
}

GaussInt residue(GaussInt x, GaussInt m) {
  const ModulusKind kind = classify_modulus(m);
  const GaussInt r = x - divide_nearest(x, m) * m;
  if (kind == ModulusKind::kOnePlusI) {
    // Every unit is congruent to 1 modulo (1+i).
    return r.is_zero() ? GaussInt{0, 0} : GaussInt{1, 0};
  }
  return {mod2(r.re), mod2(r.im)};
}

std::string to_string(GaussInt x) {
  std::ostringstream os;
  os << x.re << (x.im < 0 ? "-" : "+") << (x.im < 0 ? -x.im : x.im) << "i";
  return os.str();
}

GaussHalf GaussHalf::from_int(GaussInt x) {
  return GaussHalf(GaussInt{2, 0} * x);
}

bool GaussHalf::congruent(const GaussHalf& other) const {
  const GaussInt diff = num - other.num;
  return mod2(diff.re) == 0 && mod2(diff.im) == 0;
}

GaussHalf GaussHalf::normalized() const {
  return GaussHalf(GaussInt{mod2(num.re), mod2(num.im)});
}

GaussInt GaussHalf::integral_shift() const {
  const GaussInt rest = num - normalized().num;
  return {rest.re / 2, rest.im / 2};
}

GaussHalf operator+(GaussHalf x, GaussHalf y) { return GaussHalf(x.num + y.num); }
GaussHalf operator-(GaussHalf x, GaussHalf y) { return GaussHalf(x.num - y.num); }
GaussHalf operator*(GaussInt k, GaussHalf x) { return GaussHalf(k * x.num); }

std::string to_string(GaussHalf x) { return "(" + to_string(x.num) + ")/2"; }

GaussInt GMat2::det() const { return a() * d() - b() * c(); }

GMat2 GMat2::conj() const {
  return {a().conj(), b().conj(), c().conj(), d().conj()};
}

GMat2 GMat2::transpose() const { return {a(), c(), b(), d()}; }

GMat2 GMat2::scaled(GaussInt s) const {
  return {s * a(), s * b(), s * c(), s * d()};
}

std::int64_t GMat2::max_abs_entry() const {
  std::int64_t m = 0;
  for (const GaussInt& x : e) m = std::max({m, std::abs(x.re), std::abs(x.im)});
  return m;
}

GMat2 mat_mul(const GMat2& g, const GMat2& h) {
  return {g.a() * h.a() + g.b() * h.c(), g.a() * h.b() + g.b() * h.d(),
          g.c() * h.a() + g.d() * h.c(), g.c() * h.b() + g.d() * h.d()};
}

GMat2 operator*(const GMat2& g, const GMat2& h) { return mat_mul(g, h); }

GMat2 operator-(const GMat2& g, const GMat2& h) {
  return {g.a() - h.a(), g.b() - h.b(), g.c() - h.c(), g.d() - h.d()};
}

GMat2 mat_inv(const GMat2& g) {
  const GaussInt det = g.det();
  if (!det.is_unit()) {
    throw Error(ErrorCode::kNonUnitDeterminant,
                "determinant " + to_string(det) + " of " + to_string(g) +
                    " is not a unit");
  }
  // The inverse of a unit is its conjugate.
  const GaussInt inv_det = det.conj();
  return GMat2{g.d(), -g.b(), -g.c(), g.a()}.scaled(inv_det);
}

GMat2 reduce_mod(const GMat2& g, GaussInt m) {
  return {residue(g.a(), m), residue(g.b(), m), residue(g.c(), m),
          residue(g.d(), m)};
}

bool is_congruent_identity(const GMat2& g, GaussInt m) {
  return reduce_mod(g - GMat2::identity(), m) == GMat2{};
}

bool is_congruent_scalar(const GMat2& g, GaussInt m) {
  for (const GaussInt& u : kGaussUnits) {
    if (reduce_mod(g - GMat2::identity().scaled(u), m) == GMat2{}) return true;
  }
  return false;
}

GMat2 projective_normal_form(const GMat2& g) {
  for (const GaussInt& x : g.e) {
    if (x.is_zero()) continue;
    for (const GaussInt& u : kGaussUnits) {
      const GaussInt y = u * x;
      if (y.re > 0 && y.im >= 0) return g.scaled(u);
    }
  }
  return g;
}

bool projectively_equal(const GMat2& g, const GMat2& h) {
  return projective_normal_form(g) == projective_normal_form(h);
}

bool is_projective_identity(const GMat2& g) {
  return g.b().is_zero() && g.c().is_zero() && g.a() == g.d() && g.a().is_unit();
}

std::string to_string(const GMat2& g) {
  return "[[" + to_string(g.a()) + "," + to_string(g.b()) + "],[" +
         to_string(g.c()) + "," + to_string(g.d()) + "]]";
}

std::size_t GMat2Hash::operator()(const GMat2& g) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const GaussInt& x : g.e) {
    h ^= std::hash<std::int64_t>{}(x.re) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(x.im) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace wlc
