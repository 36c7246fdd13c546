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

#include "wlc/embeddings.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "wlc/expression.h"
#include "wlc/parallel.h"
#include "wlc/parse.h"

namespace wlc {

double OctaCoords::l1_norm() const { return std::abs(t1) + std::abs(t2) + std::abs(t3); }

std::array<double, 3> theta_ratios(const Point& p, const CharTuple& chars, double eps) {
  const double x0 = theta_on_h3(chars[0], p, eps);
  if (!(std::abs(x0) > kBasePointFloor))
    throw Error(ErrorCode::kBasePointVanishing,
                "theta[" + to_string(chars[0]) + "] vanishes at " + to_string(p));
  std::array<double, 3> xi;
  for (int k = 0; k < 3; ++k) xi[k] = theta_on_h3(chars[k + 1], p, eps) / x0;
  return xi;
}

OctaCoords octa_map(const Point& p, const CharTuple& chars, double eps) {
  const auto xi = theta_ratios(p, chars, eps);
  return {xi[0], xi[1], xi[2]};
}

LambdaCoords lambda_from_ratios(const std::array<double, 3>& xi) {
  const double s1 = xi[0] * xi[0], s2 = xi[1] * xi[1];
  return {s1 + s2, s1 * s2, xi[2] * xi[2], xi[0] * xi[1] * xi[2]};
}

LambdaCoords lambda_map(const Point& p, const CharTuple& chars, double eps) {
  return lambda_from_ratios(theta_ratios(p, chars, eps));
}

std::vector<Point> random_points(int count, std::uint64_t seed, bool real_slice) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> side(-1.0, 1.0), height(0.5, 2.0);
  std::vector<Point> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double x = side(rng);
    const double y = real_slice ? 0.0 : side(rng);
    out.emplace_back(cplx(x, y), height(rng));
  }
  return out;
}

std::string to_string(const CharTuple& t) {
  std::string s;
  for (const ThetaChar& c : t) s += (s.empty() ? "" : "|") + to_string(c);
  return s;
}

CharTuple parse_char_tuple(const std::string& s) {
  const auto parts = split_top_level(s, '|');
  if (parts.size() != 4)
    throw Error(ErrorCode::kParse, "cannot parse tuple '" + s +
                                       "': expected four characteristics separated by '|'");
  CharTuple t;
  for (int k = 0; k < 4; ++k) t[k] = parse_theta_char(parts[k]);
  return t;
}

CharTuple default_base_tuple() {
  const GaussHalf o, h(GaussInt(1, -1));
  return {ThetaChar{{o, o}, {o, o}}, ThetaChar{{o, h}, {h, o}}, ThetaChar{{h, o}, {o, h}},
          ThetaChar{{h, h}, {h, h}}};
}

std::vector<CharTuple> find_base_thetas(int samples, int group_elems, double tol,
                                        std::uint64_t seed, const BaseThetaOptions& options) {
  if (samples < 100) throw Error(ErrorCode::kParse, "find_base_thetas needs samples >= 100");
  if (group_elems < 1) throw Error(ErrorCode::kParse, "find_base_thetas needs group_elems >= 1");

  std::vector<ThetaChar> chars;
  for (const ThetaChar& c : level_one_plus_i_characteristics())
    if (!is_vanishing_characteristic(c)) chars.push_back(c);
  std::sort(chars.begin(), chars.end());
  const std::size_t m = chars.size();

  const GroupSpec& spec = group_spec("gammaT2");
  const std::vector<Point> pts = random_points(samples, seed);
  const std::vector<GroupElement> elems =
      sample_elements(spec, group_elems, options.word_len, seed + 1);

  // Values at p, at g p for every sampled pair, and at reduced p.
  const std::size_t pairs = pts.size() * elems.size();
  std::vector<std::vector<double>> at_p(m), at_gp(m), at_red(m);
  std::vector<Point> images(pairs, pts[0]), reduced(pts.size(), pts[0]);
  parallel_for(pairs, [&](std::size_t k) {
    images[k] = apply(elems[k % elems.size()], pts[k / elems.size()]);
  });
  parallel_for(pts.size(), [&](std::size_t i) {
    reduced[i] = reduce_to_fd(pts[i], spec, options.reduce_depth).point;
  });
  for (std::size_t c = 0; c < m; ++c) {
    at_p[c].resize(pts.size());
    at_red[c].resize(pts.size());
    at_gp[c].resize(pairs);
    parallel_for(pts.size(), [&](std::size_t i) {
      at_p[c][i] = theta_on_h3(chars[c], pts[i], options.eps);
      at_red[c][i] = theta_on_h3(chars[c], reduced[i], options.eps);
    });
    parallel_for(pairs, [&](std::size_t k) {
      at_gp[c][k] = theta_on_h3(chars[c], images[k], options.eps);
    });
  }

  // Worst ratio deviation for each ordered pair (base, other).
  std::vector<std::vector<double>> ratio_dev(m, std::vector<double>(m, 0.0));
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t o = 0; o < m; ++o) {
      double worst = 0;
      for (std::size_t k = 0; k < pairs; ++k) {
        const std::size_t i = k / elems.size();
        const double d0 = at_p[b][i], d1 = at_gp[b][k];
        if (!(std::abs(d0) > kBasePointFloor && std::abs(d1) > kBasePointFloor)) {
          worst = std::numeric_limits<double>::infinity();
          break;
        }
        worst = std::max(worst, std::abs(at_gp[o][k] / d1 - at_p[o][i] / d0));
      }
      ratio_dev[b][o] = worst;
    }
  }

  struct Miss {
    double score;
    CharTuple tuple;
    double invariance, containment;
  };
  std::vector<CharTuple> found;
  std::vector<Miss> misses;
  for (std::size_t i0 = 0; i0 < m; ++i0)
    for (std::size_t i1 = 0; i1 < m; ++i1)
      for (std::size_t i2 = 0; i2 < m; ++i2)
        for (std::size_t i3 = 0; i3 < m; ++i3) {
          if (i1 == i0 || i2 == i0 || i2 == i1 || i3 == i0 || i3 == i1 || i3 == i2) continue;
          const double inv =
              std::max({ratio_dev[i0][i1], ratio_dev[i0][i2], ratio_dev[i0][i3]});
          double worst_norm = 0;
          for (std::size_t i = 0; i < pts.size(); ++i) {
            const double x0 = at_red[i0][i];
            if (!(std::abs(x0) > kBasePointFloor)) {
              worst_norm = std::numeric_limits<double>::infinity();
              break;
            }
            const double n = (std::abs(at_red[i1][i]) + std::abs(at_red[i2][i]) +
                              std::abs(at_red[i3][i])) / std::abs(x0);
            worst_norm = std::max(worst_norm, n);
          }
          const CharTuple t{chars[i0], chars[i1], chars[i2], chars[i3]};
          if (inv <= tol && worst_norm <= 1 + options.containment_slack) {
            found.push_back(t);
          } else {
            const double score = std::max(inv / tol, worst_norm - 1);
            misses.push_back({score, t, inv, worst_norm});
          }
        }
  std::sort(found.begin(), found.end());
  if (found.empty()) {
    std::stable_sort(misses.begin(), misses.end(),
                     [](const Miss& a, const Miss& b) { return a.score < b.score; });
    std::ostringstream os;
    os.precision(6);
    os << "no admissible 4-tuple among " << m << " even characteristics; nearest misses:";
    for (std::size_t k = 0; k < std::min<std::size_t>(5, misses.size()); ++k)
      os << "\n  " << to_string(misses[k].tuple) << "  ratio deviation "
         << misses[k].invariance << ", max |t1|+|t2|+|t3| " << misses[k].containment;
    throw NoTupleFound(os.str());
  }
  return found;
}

std::vector<CatalogEntry> deep_theta_catalog(int scan_samples) {
  const std::array<GaussInt, 4> nums{GaussInt(0), GaussInt(1), GaussInt(0, 1), GaussInt(1, 1)};
  std::vector<CatalogEntry> out;
  out.reserve(256);
  for (int code = 0; code < 256; ++code) {
    ThetaChar c;
    c.a[0] = GaussHalf(nums[(code >> 6) & 3]);
    c.a[1] = GaussHalf(nums[(code >> 4) & 3]);
    c.b[0] = GaussHalf(nums[(code >> 2) & 3]);
    c.b[1] = GaussHalf(nums[code & 3]);
    out.push_back({c, false, c.is_level_one_plus_i()});
  }
  parallel_for(out.size(), [&](std::size_t k) {
    out[k].odd = is_vanishing_characteristic(out[k].chars, scan_samples);
  });
  return out;
}

PointFunction resolve_function(const std::string& id, double eps, const CharTuple& tuple) {
  if (id == "const1") return [](const Point&) { return std::complex<double>(1.0); };
  if (id == "height") return [](const Point& p) { return std::complex<double>(p.t()); };
  if (id == "lambda1d")
    return [eps](const Point& p) { return modular_lambda(cplx(p.z().real(), p.t()), eps); };
  for (int k = 1; k <= 3; ++k) {
    if (id == "octa_t" + std::to_string(k))
      return [eps, tuple, k](const Point& p) {
        return std::complex<double>(theta_ratios(p, tuple, eps)[k - 1]);
      };
  }
  for (int k = 1; k <= 4; ++k) {
    if (id == "lambda_l" + std::to_string(k))
      return [eps, tuple, k](const Point& p) {
        const LambdaCoords l = lambda_map(p, tuple, eps);
        const double v[4] = {l.l1, l.l2, l.l3, l.l4};
        return std::complex<double>(v[k - 1]);
      };
  }
  if (id.rfind("expr:", 0) == 0) {
    auto e = std::make_shared<Expression>(Expression::parse(id.substr(5)));
    return [eps, e](const Point& p) { return e->evaluate(p, eps); };
  }
  throw Error(ErrorCode::kUnknownName, "unknown function: " + id);
}

std::vector<std::string> function_ids() {
  return {"const1",    "height",    "lambda1d",  "octa_t1",   "octa_t2",  "octa_t3",
          "lambda_l1", "lambda_l2", "lambda_l3", "lambda_l4", "expr:<expression>"};
}

InvarianceReport invariance_test(const std::string& fn, const GroupSpec& spec, int samples,
                                 int elems, double tol, std::uint64_t seed,
                                 const InvarianceOptions& options) {
  if (samples < 1 || elems < 1)
    throw Error(ErrorCode::kParse, "invariance test needs samples, elems >= 1");
  const PointFunction f =
      resolve_function(fn, options.eps, options.tuple.value_or(default_base_tuple()));
  const std::vector<Point> pts = random_points(samples, seed, spec.real_slice);
  const std::vector<GroupElement> gs =
      sample_elements(spec, elems, options.max_word_len, seed + 1);

  std::vector<std::complex<double>> base(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { base[i] = f(pts[i]); });
  std::vector<double> dev(pts.size() * gs.size());
  parallel_for(dev.size(), [&](std::size_t k) {
    const std::size_t i = k / gs.size();
    dev[k] = std::abs(f(apply(gs[k % gs.size()], pts[i])) - base[i]);
  });

  InvarianceReport r;
  r.function = fn;
  r.group = spec.name;
  r.samples = samples;
  r.elements = elems;
  r.seed = seed;
  r.tol = tol;
  r.worst_point = pts[0];
  r.worst_word = "id";
  for (std::size_t k = 0; k < dev.size(); ++k) {
    // NaN counts as the worst possible deviation.
    const double d = std::isnan(dev[k]) ? std::numeric_limits<double>::infinity() : dev[k];
    if (k == 0 || d > r.max_abs_deviation) {
      r.max_abs_deviation = d;
      r.worst_point = pts[k / gs.size()];
      r.worst_word = word_to_string(spec, gs[k % gs.size()].word);
    }
  }
  return r;
}

}  // namespace wlc
