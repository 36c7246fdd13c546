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

#include "wlc/theta.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "wlc/summation.h"

namespace wlc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// x * m reduced modulo 2, with the rounding error of the product recovered
// by an fma so that large m keeps full relative accuracy.
double mod2_product(double x, double m) {
  const double p = x * m;
  const double err = std::fma(x, m, -p);
  const double r = p - 2.0 * std::round(0.5 * p);
  return r + err;
}

double min_eigenvalue(const HermMat& h) {
  const double half_gap =
      std::sqrt(0.25 * (h.x11 - h.x22) * (h.x11 - h.x22) + std::norm(h.x12));
  const double lmax = 0.5 * (h.x11 + h.x22) + half_gap;
  return (h.x11 * h.x22 - std::norm(h.x12)) / lmax;
}

double tail_bound_from(double lmin, double rho, int R) {
  if (R < 2) {
    throw Error(ErrorCode::kOutOfDomain, "tail bound needs radius R >= 2");
  }
  const double k = static_cast<double>(R) + 1.0;
  if (k <= rho || !(lmin > 0.0)) return kInf;
  const double growth = std::pow((2.0 * k + 3.0) / (2.0 * k + 1.0), 3);
  const double ratio = growth * std::exp(-kPi * lmin * (2.0 * (k - rho) + 1.0));
  if (!(ratio < 1.0)) return kInf;
  const double first =
      8.0 * std::pow(2.0 * k + 1.0, 3) * std::exp(-kPi * lmin * (k - rho) * (k - rho));
  return first / (1.0 - ratio);
}

double char_shift_radius(const std::array<GaussHalf, 2>& a) {
  double rho = 0.0;
  for (const GaussHalf& x : a) {
    rho = std::max({rho, std::abs(x.value().real()), std::abs(x.value().imag())});
  }
  return rho;
}

std::array<GaussHalf, 2> row_times(const std::array<GaussHalf, 2>& v, const GMat2& m) {
  return {m.a() * v[0] + m.c() * v[1], m.b() * v[0] + m.d() * v[1]};
}

// Finds U in GL(2, Z[i]) with U Y U^* reduced: y11 <= y22 and
// |y21| <= y11 / sqrt(2).
GMat2 reduce_hermitian_basis(const HermMat& y) {
  GMat2 u = GMat2::identity();
  const GMat2 swap{0, 1, 1, 0};
  for (int iter = 0; iter < 256; ++iter) {
    const HermMat cur = congruence(u, y);
    if (cur.x22 < cur.x11) {
      u = swap * u;
      continue;
    }
    const cplx ratio = std::conj(cur.x12) / cur.x11;
    if (std::abs(ratio.real()) > 1e15 || std::abs(ratio.imag()) > 1e15) {
      throw Error(ErrorCode::kNotPositiveDefinite,
                  "imaginary part too ill-conditioned for lattice reduction");
    }
    const GaussInt mu{std::llround(ratio.real()), std::llround(ratio.imag())};
    if (mu.is_zero()) break;
    u = GMat2{1, 0, -mu, 1} * u;
  }
  return u;
}

// The series in a fixed summation basis with the characteristic shift a
// normalised into {0, 1/2}^4.
struct PreparedSeries {
  HermMat y;          // imaginary part, summation basis
  HermMat p;          // real part, summation basis
  bool real_part_zero = false;
  double a[4] = {};   // (Re a1, Im a1, Re a2, Im a2)
  std::int64_t b[4] = {};  // numerators of b in the same layout
  double sign = 1.0;  // from moving a into its normal form
  double lmin = 0.0;
  double rho = 0.0;
  GMat2 basis = GMat2::identity();
};

PreparedSeries prepare(const ThetaChar& c, const TauMat& tau, bool reduce) {
  PreparedSeries s;
  const HermMat y = tau.imag_part();
  const HermMat p = tau.real_part();
  s.basis = reduce ? reduce_hermitian_basis(y) : GMat2::identity();
  const GMat2& u = s.basis;
  s.y = congruence(u, y);
  s.p = congruence(u, p);
  s.real_part_zero = s.p.x11 == 0.0 && s.p.x22 == 0.0 && s.p.x12 == cplx(0.0, 0.0);

  // n = m U: a -> a U^{-1}, b -> b U^*.
  const std::array<GaussHalf, 2> a = row_times(c.a, mat_inv(u));
  const std::array<GaussHalf, 2> b = row_times(c.b, u.conj().transpose());

  std::int64_t parity = 0;
  for (int j = 0; j < 2; ++j) {
    const GaussHalf an = a[j].normalized();
    const GaussInt k = a[j].integral_shift();
    parity += k.re * b[j].num.re + k.im * b[j].num.im;
    s.a[2 * j] = 0.5 * static_cast<double>(an.num.re);
    s.a[2 * j + 1] = 0.5 * static_cast<double>(an.num.im);
    s.b[2 * j] = b[j].num.re;
    s.b[2 * j + 1] = b[j].num.im;
  }
  s.sign = (parity & 1) ? -1.0 : 1.0;
  s.lmin = min_eigenvalue(s.y);
  s.rho = 0.0;
  for (double x : s.a) s.rho = std::max(s.rho, std::abs(x));
  return s;
}

double box_count(int R) { return std::pow(2.0 * R + 1.0, 4); }

// Sum over the sup-norm box of radius R, skipping terms whose Gaussian
// exponent exceeds `cutoff` (pass +inf to keep everything). Inner ranges
// come from completing the square in the remaining coordinates, so only the
// ellipsoid {v Y v^* <= cutoff} inside the box is visited.
ThetaEvaluation box_sum(const PreparedSeries& s, int R, double cutoff) {
  const double h11 = s.y.x11, h22 = s.y.x22;
  const cplx h12 = s.y.x12;
  const double det = h11 * h22 - std::norm(h12);
  const bool prune = std::isfinite(cutoff);

  CompensatedComplexSum total;
  std::int64_t terms = 0;
  for (int m1r = -R; m1r <= R; ++m1r) {
    const double x1 = m1r + s.a[0];
    CompensatedComplexSum slab;
    for (int m1i = -R; m1i <= R; ++m1i) {
      const double y1 = m1i + s.a[1];
      const double v1n = x1 * x1 + y1 * y1;
      if (prune && det / h22 * v1n > cutoff) continue;
      const cplx v1(x1, y1);
      const cplx w = v1 * h12;
      const double alpha = w.real(), beta = w.imag();
      const double base = h11 * v1n;

      int lo2 = -R, hi2 = R;
      if (prune) {
        const double disc = alpha * alpha - h22 * (base - beta * beta / h22 - cutoff);
        if (disc < 0.0) continue;
        const double sq = std::sqrt(disc);
        lo2 = std::max(lo2, static_cast<int>(std::ceil((-alpha - sq) / h22 - s.a[2])));
        hi2 = std::min(hi2, static_cast<int>(std::floor((-alpha + sq) / h22 - s.a[2])));
      }
      const cplx wp = v1 * s.p.x12;
      const double base_p = s.p.x11 * v1n;
      const std::int64_t par1 = m1r * s.b[0] + m1i * s.b[1];

      for (int m2r = lo2; m2r <= hi2; ++m2r) {
        const double x2 = m2r + s.a[2];
        const double rest = base + h22 * x2 * x2 + 2.0 * alpha * x2;
        int lo3 = -R, hi3 = R;
        if (prune) {
          const double disc = beta * beta - h22 * (rest - cutoff);
          if (disc < 0.0) continue;
          const double sq = std::sqrt(disc);
          lo3 = std::max(lo3, static_cast<int>(std::ceil((-beta - sq) / h22 - s.a[3])));
          hi3 = std::min(hi3, static_cast<int>(std::floor((-beta + sq) / h22 - s.a[3])));
        }
        const std::int64_t par2 = par1 + m2r * s.b[2];
        for (int m2i = lo3; m2i <= hi3; ++m2i) {
          const double y2 = m2i + s.a[3];
          const double q = rest + h22 * y2 * y2 + 2.0 * beta * y2;
          const double mag = std::exp(-kPi * q);
          const double sgn = ((par2 + m2i * s.b[3]) & 1) ? -1.0 : 1.0;
          ++terms;
          if (s.real_part_zero) {
            slab.add_real(sgn * mag);
          } else {
            const double qp = base_p + s.p.x22 * (x2 * x2 + y2 * y2) +
                              2.0 * (wp.real() * x2 + wp.imag() * y2);
            const double phase = kPi * (qp - 2.0 * std::round(0.5 * qp));
            slab.add(sgn * mag * cplx(std::cos(phase), std::sin(phase)));
          }
        }
      }
    }
    total.add(slab.value());
  }
  ThetaEvaluation out;
  out.value = s.sign * total.value();
  out.radius = R;
  out.terms = terms;
  out.basis = s.basis;
  return out;
}

double prune_cutoff(int R, double mass) {
  // Each skipped term is below exp(-pi cutoff); there are at most
  // box_count(R) of them.
  return (std::log(box_count(R)) - std::log(mass)) / kPi;
}

}  // namespace

cplx jacobi_theta(JacobiKind kind, cplx tau, double eps) {
  const double y = tau.imag();
  if (!(y > 0.0) || !std::isfinite(y) || !std::isfinite(tau.real())) {
    throw Error(ErrorCode::kNotInUpperHalfPlane, "Im tau must be positive");
  }
  if (!(eps > 0.0)) throw Error(ErrorCode::kOutOfDomain, "eps must be positive");
  auto tail = [y](double n) {
    return 2.0 * std::exp(-kPi * y * (n + 1) * (n + 1)) /
           (1.0 - std::exp(-kPi * y * (2 * n + 3)));
  };
  double n_max = std::floor(std::sqrt(std::log(2.0 / eps) / (kPi * y)));
  while (n_max > 0 && tail(n_max - 1) < eps) n_max -= 1;
  while (!(tail(n_max) < eps)) n_max += 1;
  if (n_max > 1e8) {
    throw Error(ErrorCode::kNotInUpperHalfPlane, "tau too close to the real axis");
  }
  const auto n_terms = static_cast<std::int64_t>(n_max);
  CompensatedComplexSum sum;
  for (std::int64_t n = n_terms; n >= 1; --n) {
    const double m = static_cast<double>(n) * static_cast<double>(n);
    const double mag = 2.0 * std::exp(-kPi * y * m);
    const double phase = kPi * mod2_product(tau.real(), m);
    const double sgn = (kind == JacobiKind::k01 && (n & 1)) ? -1.0 : 1.0;
    sum.add(sgn * mag * cplx(std::cos(phase), std::sin(phase)));
  }
  sum.add(1.0);
  return sum.value();
}

cplx modular_lambda(cplx tau, double eps) {
  if (!(tau.imag() > 0) || !std::isfinite(tau.real()))
    throw Error(ErrorCode::kNotInUpperHalfPlane, "lambda needs Im tau > 0");
  // Move tau into the SL(2, Z) fundamental domain, where the theta series
  // converge fast and do not cancel, then undo the moves on the value with
  // lambda(tau + 1) = 1 / lambda(tau) and lambda(-1/tau) = 1 - lambda(tau).
  enum class Move : char { kOddShift, kInvert };
  std::vector<Move> moves;
  constexpr int kMaxMoves = 100000;
  for (int k = 0; k < kMaxMoves; ++k) {
    const double n = std::round(tau.real());
    tau -= n;
    if (std::fmod(std::abs(n), 2.0) == 1.0) moves.push_back(Move::kOddShift);
    if (std::norm(tau) >= 1.0 - 1e-12) break;
    tau = -1.0 / tau;
    moves.push_back(Move::kInvert);
  }
  const cplx ratio = jacobi_theta(JacobiKind::k01, tau, eps) /
                     jacobi_theta(JacobiKind::k00, tau, eps);
  const cplx sq = ratio * ratio;
  cplx value = sq * sq;
  for (auto it = moves.rbegin(); it != moves.rend(); ++it)
    value = (*it == Move::kInvert) ? 1.0 - value : 1.0 / value;
  return value;
}

bool ThetaChar::is_level_one_plus_i() const {
  // num congruent to 0 or 1-i modulo 2: both components share a parity.
  auto ok = [](const GaussHalf& x) { return ((x.num.re ^ x.num.im) & 1) == 0; };
  return ok(a[0]) && ok(a[1]) && ok(b[0]) && ok(b[1]);
}

ThetaChar ThetaChar::normalized() const {
  return {{a[0].normalized(), a[1].normalized()}, {b[0].normalized(), b[1].normalized()}};
}

std::string to_string(const ThetaChar& c) {
  return to_string(c.a[0]) + "," + to_string(c.a[1]) + ";" + to_string(c.b[0]) + "," +
         to_string(c.b[1]);
}

std::vector<ThetaChar> level_one_plus_i_characteristics() {
  const GaussHalf zero{};
  const GaussHalf half{GaussInt{1, -1}};
  std::vector<ThetaChar> out;
  for (const GaussHalf& a1 : {zero, half})
    for (const GaussHalf& a2 : {zero, half})
      for (const GaussHalf& b1 : {zero, half})
        for (const GaussHalf& b2 : {zero, half}) out.push_back({{a1, a2}, {b1, b2}});
  return out;
}

TauMat::TauMat(cplx t11, cplx t12, cplx t21, cplx t22) : m_{t11, t12, t21, t22} {
  for (const cplx& z : m_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::kNotPositiveDefinite, "non-finite tau entry");
    }
  }
  const HermMat y = imag_part();
  if (!(y.x11 > 0.0) || !(y.x22 > 0.0) || !(y.det() > 0.0)) {
    throw Error(ErrorCode::kNotPositiveDefinite,
                "Im tau = (tau - tau^*)/2i is not positive definite");
  }
}

TauMat TauMat::from_point(const Point& p) {
  const HermMat x = point_to_herm(p);
  const cplx i(0.0, 1.0);
  return TauMat(i * x.x11, i * x.x12, i * std::conj(x.x12), i * x.x22);
}

TauMat TauMat::imaginary_diagonal(double y1, double y2) {
  return TauMat(cplx(0.0, y1), 0.0, 0.0, cplx(0.0, y2));
}

HermMat TauMat::imag_part() const {
  const cplx two_i(0.0, 2.0);
  return {m_[0].imag(), m_[3].imag(), (m_[1] - std::conj(m_[2])) / two_i};
}

HermMat TauMat::real_part() const {
  return {m_[0].real(), m_[3].real(), 0.5 * (m_[1] + std::conj(m_[2]))};
}

double theta_tail_bound(const TauMat& tau, const ThetaChar& c, int R) {
  return tail_bound_from(min_eigenvalue(tau.imag_part()), char_shift_radius(c.a), R);
}

ThetaEvaluation siegel_theta_detailed(const ThetaChar& c, const TauMat& tau, double eps,
                                      const ThetaOptions& options) {
  if (!(eps > 0.0)) throw Error(ErrorCode::kOutOfDomain, "eps must be positive");
  const PreparedSeries s = prepare(c, tau, options.reduce_basis);

  // Half the budget for the box tail, a negligible slice for pruning.
  const double box_budget = 0.5 * eps;
  const int cap = std::max(2, options.max_radius);
  if (!(tail_bound_from(s.lmin, s.rho, cap) <= box_budget)) {
    std::ostringstream os;
    os << "truncation radius would exceed " << cap << " (least eigenvalue of Im tau "
       << s.lmin << ")";
    throw Error(ErrorCode::kTruncationRadiusOverflow, os.str());
  }
  int lo = 2, hi = cap;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (tail_bound_from(s.lmin, s.rho, mid) <= box_budget) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const int R = lo;
  const double prune_mass = 1e-10 * eps;
  ThetaEvaluation out = box_sum(s, R, prune_cutoff(R, prune_mass));
  out.tail_bound = tail_bound_from(s.lmin, s.rho, R) + prune_mass;
  return out;
}

cplx siegel_theta(const ThetaChar& c, const TauMat& tau, double eps,
                  const ThetaOptions& options) {
  return siegel_theta_detailed(c, tau, eps, options).value;
}

ThetaEvaluation siegel_theta_at_radius(const ThetaChar& c, const TauMat& tau, int radius,
                                       const ThetaOptions& options) {
  if (radius < 0) throw Error(ErrorCode::kOutOfDomain, "radius must be non-negative");
  const PreparedSeries s = prepare(c, tau, options.reduce_basis);
  ThetaEvaluation out = box_sum(s, radius, kInf);
  out.tail_bound = radius >= 2 ? tail_bound_from(s.lmin, s.rho, radius) : kInf;
  return out;
}

cplx theta_on_h3_complex(const ThetaChar& c, const Point& p, double eps) {
  return siegel_theta(c, TauMat::from_point(p), eps);
}

double theta_on_h3(const ThetaChar& c, const Point& p, double eps) {
  if (!c.is_level_one_plus_i()) {
    throw Error(ErrorCode::kInvalidCharacteristic,
                to_string(c) + " is not a level-(1+i) characteristic");
  }
  const cplx v = theta_on_h3_complex(c, p, eps);
  const double threshold = std::max(10.0 * eps, 1e-9);
  if (!(std::abs(v.imag()) < threshold)) {
    std::ostringstream os;
    os.precision(17);
    os << "theta[" << to_string(c) << "] at " << to_string(p) << " has imaginary part "
       << v.imag();
    throw Error(ErrorCode::kRealnessViolation, os.str());
  }
  return v.real();
}

std::vector<TauMat> spread_sample_taus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<TauMat> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double y11 = 0.6 + unit(rng), y22 = 0.6 + unit(rng);
    const double r = 0.45 * unit(rng) * std::sqrt(y11 * y22);
    const cplx y12 = std::polar(r, 2.0 * kPi * unit(rng));
    const double p11 = 2.0 * unit(rng) - 1.0, p22 = 2.0 * unit(rng) - 1.0;
    const cplx p12(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
    const cplx i(0.0, 1.0);
    out.emplace_back(p11 + i * y11, p12 + i * y12, std::conj(p12) + i * std::conj(y12),
                     p22 + i * y22);
  }
  return out;
}

bool is_vanishing_characteristic(const ThetaChar& c, int samples, std::uint64_t seed) {
  for (const TauMat& tau : spread_sample_taus(samples, seed)) {
    if (!(std::abs(siegel_theta(c, tau, 1e-14)) < 1e-12)) return false;
  }
  return true;
}

GMat4 GMat4::identity() {
  GMat4 g;
  for (int k = 0; k < 4; ++k) g(k, k) = 1;
  return g;
}

GMat4 GMat4::j4() {
  GMat4 g;
  g(0, 2) = -1;
  g(1, 3) = -1;
  g(2, 0) = 1;
  g(3, 1) = 1;
  return g;
}

GMat4 GMat4::from_blocks(const GMat2& A, const GMat2& B, const GMat2& C,
                         const GMat2& D) {
  GMat4 g;
  const GMat2* blocks[2][2] = {{&A, &B}, {&C, &D}};
  for (int br = 0; br < 2; ++br)
    for (int bc = 0; bc < 2; ++bc)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) g(2 * br + r, 2 * bc + c) = blocks[br][bc]->e[2 * r + c];
  return g;
}

GMat2 GMat4::block(int br, int bc) const {
  const GMat4& g = *this;
  return {g(2 * br, 2 * bc), g(2 * br, 2 * bc + 1), g(2 * br + 1, 2 * bc),
          g(2 * br + 1, 2 * bc + 1)};
}

GMat4 GMat4::conj_transpose() const {
  GMat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = (*this)(c, r).conj();
  return out;
}

GMat4 operator*(const GMat4& g, const GMat4& h) {
  GMat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      GaussInt acc;
      for (int k = 0; k < 4; ++k) acc = acc + g(r, k) * h(k, c);
      out(r, c) = acc;
    }
  return out;
}

bool GMat4::is_symplectic_unitary() const {
  return (*this) * j4() * conj_transpose() == j4();
}

TauMat tau_transform(const GMat4& g, const TauMat& tau) {
  if (!g.is_symplectic_unitary()) {
    throw Error(ErrorCode::kNotSymplectic, "g J4 g^* != J4");
  }
  struct C2 {
    cplx a, b, c, d;
  };
  auto to_c2 = [](const GMat2& m) {
    return C2{m.a().to_complex(), m.b().to_complex(), m.c().to_complex(),
              m.d().to_complex()};
  };
  auto mul = [](const C2& x, const C2& y) {
    return C2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
              x.c * y.b + x.d * y.d};
  };
  auto add = [](const C2& x, const C2& y) {
    return C2{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  };
  const C2 t{tau(0, 0), tau(0, 1), tau(1, 0), tau(1, 1)};
  const C2 num = add(mul(to_c2(g.block(0, 0)), t), to_c2(g.block(0, 1)));
  const C2 den = add(mul(to_c2(g.block(1, 0)), t), to_c2(g.block(1, 1)));
  const cplx det = den.a * den.d - den.b * den.c;
  const double scale = std::max({std::abs(den.a), std::abs(den.b), std::abs(den.c),
                                 std::abs(den.d)});
  if (!(std::abs(det) > 1e-13 * scale * scale)) {
    throw Error(ErrorCode::kSingularDenominator, "C tau + D is singular");
  }
  const C2 inv{den.d / det, -den.b / det, -den.c / det, den.a / det};
  const C2 r = mul(num, inv);
  return TauMat(r.a, r.b, r.c, r.d);
}

}  // namespace wlc
