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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Expected values come from the independent oracles in
// oracles.h, never from the library under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.h"
#include "wlc/embeddings.h"
#include "wlc/groups.h"
#include "wlc/halfspace.h"
#include "wlc/hypergeometric.h"
#include "wlc/theta.h"

namespace wlc {
namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

cplx mobius(const GMat2& g, cplx tau) {
  return (g.a().to_complex() * tau + g.b().to_complex()) /
         (g.c().to_complex() * tau + g.d().to_complex());
}

std::vector<int> random_word(const GroupSpec& spec, int max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, max_len), letter(0, spec.letter_count() - 1);
  std::vector<int> w(len(rng));
  for (int& l : w) l = letter(rng);
  return w;
}

// 1. Realness of the level-(1+i) thetas on hyperbolic 3-space.
Outcome realness() {
  double worst = 0;
  for (const Point& p : random_points(200, 101))
    for (const ThetaChar& c : level_one_plus_i_characteristics())
      worst = std::max(worst, std::abs(theta_on_h3_complex(c, p, 1e-12).imag()));
  return {worst < 1e-9, fmt("max |Im theta| = %.3g over 16 x 200", worst)};
}

// 2. Truncated evaluation against a fixed radius-10 box sum. Relative error
// where the sum is nonzero; characteristics that vanish at the given tau
// (odd ones everywhere, some even ones on diagonal tau) must come out below
// 1e-12 in absolute value instead.
Outcome siegel_oracle() {
  const auto chars = level_one_plus_i_characteristics();
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> re(-1, 1), im(0.6, 1.6);
  std::vector<TauMat> taus;
  for (int k = 0; k < 20; ++k)
    taus.emplace_back(cplx(re(rng), im(rng)), 0, 0, cplx(re(rng), im(rng)));
  for (const TauMat& t : spread_sample_taus(20, 103)) taus.push_back(t);
  double rel = 0, zero = 0;
  int nonzero = 0;
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const ThetaChar& c = chars[(7 * k) % chars.size()];
    const cplx want = oracle::brute_siegel(c, taus[k], 10);
    const double err = std::abs(siegel_theta(c, taus[k], 1e-13) - want);
    if (std::abs(want) > 1e-8) {
      rel = std::max(rel, err / std::abs(want));
      ++nonzero;
    } else {
      zero = std::max(zero, err);
    }
  }
  return {rel < 1e-10 && zero < 1e-12,
          fmt("max relative error %.3g (%d nonzero values), %.3g at vanishing ones; "
              "20 diagonal + 20 general tau",
              rel, nonzero, zero)};
}

// 3. The classical lambda function.
Outcome lambda_suite() {
  const double at_i = std::abs(modular_lambda(cplx(0, 1)) - 0.5);
  std::mt19937_64 rng(104);
  std::uniform_real_distribution<double> re(-1, 1), im(0.3, 2);
  double shift = 0;
  for (int k = 0; k < 100; ++k) {
    const cplx tau(re(rng), im(rng));
    shift = std::max(shift, std::abs(modular_lambda(tau + 2.0) - modular_lambda(tau)));
  }
  double words = 0;
  for (const GroupElement& e : sample_congruence(group_spec("sl2z"), 2, 50, 8, 105)) {
    const cplx tau(re(rng), im(rng));
    words = std::max(words, std::abs(modular_lambda(mobius(e.matrix, tau)) -
                                     oracle::brute_lambda(tau, 60)));
  }
  return {at_i < 1e-10 && shift < 1e-11 && words < 1e-9,
          fmt("|l(i)-1/2| = %.3g, shift %.3g, 50 level-2 words %.3g", at_i, shift, words)};
}

// 4. The Schwarz map inverts lambda.
Outcome schwarz() {
  double worst = 0;
  for (int k = 0; k < 20; ++k) {
    const double x = 0.05 + 0.9 * k / 19;
    worst = std::max(worst, std::abs(oracle::brute_lambda(schwarz_map_inf(x), 80) - x));
  }
  const double centre = std::abs(schwarz_map_inf(0.5) - cplx(0, 1));
  return {worst < 1e-8 && centre <= 4e-16,
          fmt("max round-trip error %.3g, |s(1/2) - i| = %.3g", worst, centre)};
}

// 5. The action on the upper half-space.
Outcome action() {
  std::mt19937_64 rng(106);
  std::uniform_real_distribution<double> side(-1, 1), height(0.3, 2);
  auto point = [&] { return Point(cplx(side(rng), side(rng)), height(rng)); };
  bool exact = true;
  for (int k = 0; k < 100; ++k) {
    const Point p = point();
    const Point q = act(GMat2(1, kGaussI, 0, 1), p);
    exact = exact && q.z() == p.z() + cplx(0, 1) && q.t() == p.t();
  }
  const GroupSpec& gamma = group_spec("gamma");
  double hom = 0, iso = 0;
  for (int k = 0; k < 1000; ++k) {
    const GMat2 g = replay(gamma, random_word(gamma, 6, rng)).matrix;
    const GMat2 h = replay(gamma, random_word(gamma, 6, rng)).matrix;
    const Point p = point(), q = point();
    hom = std::max(hom, hyp_distance(act(g * h, p), oracle::herm_act(g, oracle::herm_act(h, p))));
    iso = std::max(iso, std::abs(hyp_distance(act(g, p), act(g, q)) - hyp_distance(p, q)));
  }
  return {exact && hom < 1e-10 && iso < 1e-10,
          fmt("translation exact: %s, homomorphism %.3g, isometry %.3g", exact ? "yes" : "no",
              hom, iso)};
}

// 6. The lambda coordinates lie on l2 l3 = l4^2.
Outcome quadric() {
  const CharTuple t = default_base_tuple();
  double worst = 0;
  for (const Point& p : random_points(10000, 107)) {
    const LambdaCoords l = lambda_map(p, t, 1e-12);
    const double scale = std::max({std::abs(l.l2 * l.l3), l.l4 * l.l4, 1e-300});
    worst = std::max(worst, std::abs(l.l2 * l.l3 - l.l4 * l.l4) / scale);
  }
  return {worst <= 1e-12, fmt("max relative defect %.3g over 1e4 points", worst)};
}

// 7. Base tuple search, containment and invariance.
Outcome base_tuple() {
  std::vector<CharTuple> tuples;
  try {
    tuples = find_base_thetas(100, 30, 1e-8, 108);
  } catch (const Error& e) {
    return {false, std::string("search returned nothing: ") + e.message()};
  }
  const CharTuple& t = tuples.front();
  const GroupSpec& spec = group_spec("gammaT2");
  const auto points = random_points(1000, 109);
  double contain = 0;
  for (const Point& p : points)
    contain = std::max(contain, octa_map(reduce_to_fd(p, spec, 4).point, t, 1e-12).l1_norm());
  double ratio = 0;
  const auto elems = sample_elements(spec, 30, 6, 110);
  for (std::size_t k = 0; k < 100; ++k) {
    const auto base = theta_ratios(points[k], t, 1e-12);
    for (const GroupElement& e : elems) {
      const auto moved = theta_ratios(apply(e, points[k]), t, 1e-12);
      for (int j = 0; j < 3; ++j) ratio = std::max(ratio, std::abs(moved[j] - base[j]));
    }
  }
  return {contain <= 1 + 1e-9 && ratio < 1e-8,
          fmt("%zu tuples; max |t1|+|t2|+|t3| = %.12f on 1e3 reduced points, ratio drift %.3g",
              tuples.size(), contain, ratio)};
}

// 8. Reduction lands on the same height from anywhere in the orbit.
Outcome reduction() {
  const GroupSpec& w = group_spec("whitehead");
  std::mt19937_64 rng(111);
  const auto points = random_points(200, 112);
  double worst = 0;
  for (const Point& p : points) {
    const GroupElement e = replay(w, random_word(w, 6, rng));
    const double a = reduce_to_fd(p, w, 8).point.t();
    const double b = reduce_to_fd(apply(e, p), w, 8).point.t();
    worst = std::max(worst, std::abs(a - b));
  }
  return {worst < 1e-8, fmt("max height disagreement %.3g over 200 trials", worst)};
}

// 9. Truncation radius and tail bound are sound.
Outcome truncation() {
  const double eps = 1e-12;
  const ThetaOptions raw{64, false};
  const auto deep = deep_theta_catalog(1);
  const auto taus = spread_sample_taus(50, 113);
  std::mt19937_64 rng(114);
  std::uniform_int_distribution<std::size_t> pick(0, deep.size() - 1);
  double doubling = 0, slack = INFINITY;
  for (const TauMat& tau : taus) {
    const ThetaChar& c = deep[pick(rng)].chars;
    const ThetaEvaluation at = siegel_theta_detailed(c, tau, eps, raw);
    const cplx twice = siegel_theta_at_radius(c, tau, 2 * at.radius, raw).value;
    doubling = std::max(doubling, std::abs(twice - at.value));
    const double bound = theta_tail_bound(tau, c, at.radius);
    const double mass = oracle::brute_tail(c, tau, at.radius, 2 * at.radius + 2);
    slack = std::min(slack, bound - mass);
  }
  return {doubling < 2 * eps && slack >= 0,
          fmt("max change on doubling %.3g (< %.0e); min bound - tail %.3g", doubling, 2 * eps,
              slack)};
}

}  // namespace
}  // namespace wlc

int main() {
  using namespace wlc;
  const std::vector<std::function<Outcome()>> criteria = {
      realness, siegel_oracle, lambda_suite, schwarz,    action,
      quadric,  base_tuple,    reduction,    truncation,
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s  [%.2f s]\n", k + 1, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
