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

#ifndef WLC_GAUSSIAN_H_
#define WLC_GAUSSIAN_H_

// Exact arithmetic in Z[i]: Gaussian integers, half-integral Gaussian
// rationals (denominator 2) and 2x2 matrices over Z[i]. All arithmetic is
// checked; overflow of the 64-bit components throws ErrorCode::kOverflow.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>

#include "wlc/error.h"

namespace wlc {

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;
  friend constexpr auto operator<=>(const GaussInt&, const GaussInt&) = default;

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  constexpr GaussInt conj() const { return {re, -im}; }
  // re^2 + im^2, checked.
  std::int64_t norm() const;
  bool is_unit() const;
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

inline constexpr GaussInt kGaussI{0, 1};
inline constexpr GaussInt kOnePlusI{1, 1};
inline constexpr std::array<GaussInt, 4> kGaussUnits = {
    GaussInt{1, 0}, GaussInt{0, 1}, GaussInt{-1, 0}, GaussInt{0, -1}};

GaussInt operator+(GaussInt x, GaussInt y);
GaussInt operator-(GaussInt x, GaussInt y);
GaussInt operator-(GaussInt x);
GaussInt operator*(GaussInt x, GaussInt y);

GaussInt gi_mul(GaussInt x, GaussInt y);

// Quotient of x by m rounded to the nearest Gaussian integer (halves round
// up in each component). Requires m != 0.
GaussInt divide_nearest(GaussInt x, GaussInt m);

// Exact quotient; throws if m does not divide x.
GaussInt divide_exact(GaussInt x, GaussInt m);

bool divides(GaussInt m, GaussInt x);

// Canonical residue of x modulo the ideal (m), m in {1+i, 2} up to units.
// Residue sets are {0, 1} for 1+i and {0, 1, i, 1+i} for 2.
GaussInt residue(GaussInt x, GaussInt m);

// Formats as "a+bi" / "a-bi", e.g. "1+1i", "0+0i", "3-2i".
std::string to_string(GaussInt x);

// The value num / 2. Both theta characteristic levels used in this library
// live in (1/2)Z[i], because 1/(1+i) = (1-i)/2.
struct GaussHalf {
  GaussInt num;

  constexpr GaussHalf() = default;
  constexpr explicit GaussHalf(GaussInt n) : num(n) {}
  static GaussHalf from_int(GaussInt x);

  friend constexpr bool operator==(const GaussHalf&, const GaussHalf&) = default;
  friend constexpr auto operator<=>(const GaussHalf&, const GaussHalf&) = default;

  std::complex<double> value() const {
    return {0.5 * static_cast<double>(num.re), 0.5 * static_cast<double>(num.im)};
  }
  // Congruence modulo Z[i].
  bool congruent(const GaussHalf& other) const;
  // Representative with both numerator components in {0, 1}.
  GaussHalf normalized() const;
  // The integral part subtracted by normalized(): *this = normalized() + shift.
  GaussInt integral_shift() const;
};

GaussHalf operator+(GaussHalf x, GaussHalf y);
GaussHalf operator-(GaussHalf x, GaussHalf y);
// Gaussian integer times half-integer.
GaussHalf operator*(GaussInt k, GaussHalf x);

// Formats as "(a+bi)/2".
std::string to_string(GaussHalf x);

// 2x2 matrix [[a, b], [c, d]] over Z[i].
struct GMat2 {
  std::array<GaussInt, 4> e{};

  constexpr GMat2() = default;
  constexpr GMat2(GaussInt a, GaussInt b, GaussInt c, GaussInt d) : e{a, b, c, d} {}

  static constexpr GMat2 identity() { return {1, 0, 0, 1}; }

  constexpr const GaussInt& a() const { return e[0]; }
  constexpr const GaussInt& b() const { return e[1]; }
  constexpr const GaussInt& c() const { return e[2]; }
  constexpr const GaussInt& d() const { return e[3]; }

  friend constexpr bool operator==(const GMat2&, const GMat2&) = default;
  friend constexpr auto operator<=>(const GMat2&, const GMat2&) = default;

  GaussInt det() const;
  GMat2 conj() const;
  GMat2 transpose() const;
  GMat2 scaled(GaussInt s) const;
  std::int64_t max_abs_entry() const;
};

GMat2 mat_mul(const GMat2& g, const GMat2& h);
GMat2 operator*(const GMat2& g, const GMat2& h);
GMat2 operator-(const GMat2& g, const GMat2& h);

// Inverse of a matrix with unit determinant; throws kNonUnitDeterminant
// otherwise.
GMat2 mat_inv(const GMat2& g);

// Entry-wise canonical residue. Throws kUnsupportedModulus unless m is
// 1+i or 2 (up to multiplication by a unit).
GMat2 reduce_mod(const GMat2& g, GaussInt m);

bool is_congruent_identity(const GMat2& g, GaussInt m);

// True iff g = u*I mod m for some unit u (projective congruence).
bool is_congruent_scalar(const GMat2& g, GaussInt m);

// Representative of g up to multiplication by {1, i, -1, -i}: the first
// nonzero entry is scaled into {re > 0, im >= 0}.
GMat2 projective_normal_form(const GMat2& g);

bool projectively_equal(const GMat2& g, const GMat2& h);

// True iff g is a unit multiple of the identity.
bool is_projective_identity(const GMat2& g);

// "[[a,b],[c,d]]" with entries in the GaussInt grammar.
std::string to_string(const GMat2& g);

struct GMat2Hash {
  std::size_t operator()(const GMat2& g) const;
};

}  // namespace wlc

#endif  // WLC_GAUSSIAN_H_
