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

#include "wlc/groups.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <unordered_set>

namespace wlc {

namespace {

struct ElementKey {
  GMat2 m;
  bool t;
  friend bool operator==(const ElementKey&, const ElementKey&) = default;
};

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& k) const {
    return GMat2Hash{}(k.m) * 31 + (k.t ? 1 : 0);
  }
};

ElementKey key_of(const GroupElement& e) {
  return {projective_normal_form(e.matrix), e.transposed};
}

GroupElement power(const GroupSpec& spec, const GroupElement& x, std::int64_t k) {
  GroupElement base = k < 0 ? inverse(spec, x) : x;
  GroupElement out = identity_element();
  for (std::int64_t i = 0; i < std::llabs(k); ++i) out = compose(spec, out, base);
  return out;
}

std::string spec_fingerprint(const GroupSpec& spec) {
  std::ostringstream os;
  os << spec.name << '|' << spec.include_transpose << '|' << spec.real_slice;
  for (const GMat2& g : spec.generators) os << '|' << to_string(g);
  if (spec.filter) {
    os << "|mod " << to_string(spec.filter->modulus);
    for (const GMat2& g : spec.filter->allowed) os << ' ' << to_string(g);
  }
  return os.str();
}

}  // namespace

GMat2 residue_class_key(const GMat2& g, GaussInt m) {
  GMat2 best = reduce_mod(g, m);
  for (const GaussInt& u : kGaussUnits) best = std::min(best, reduce_mod(g.scaled(u), m));
  return best;
}

bool ResidueFilter::admits(const GMat2& g) const {
  return std::binary_search(allowed.begin(), allowed.end(), residue_class_key(g, modulus));
}

ResidueFilter residue_closure(const std::vector<GMat2>& generators, GaussInt m) {
  std::vector<GMat2> found{residue_class_key(GMat2::identity(), m)};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const GMat2& g : generators) {
      for (const GMat2& h : {g, mat_inv(g)}) {
        const GMat2 k = residue_class_key(found[i] * h, m);
        if (std::find(found.begin(), found.end(), k) == found.end()) found.push_back(k);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return {m, found};
}

int GroupSpec::letter_count() const {
  return 2 * static_cast<int>(generators.size()) + (include_transpose ? 1 : 0);
}

int GroupSpec::inverse_letter(int letter) const {
  if (letter == 2 * static_cast<int>(generators.size())) return letter;
  return letter ^ 1;
}

GroupElement identity_element() { return {}; }

GroupElement letter_element(const GroupSpec& spec, int letter) {
  const int n = static_cast<int>(spec.generators.size());
  if (letter < 0 || letter >= spec.letter_count())
    throw Error(ErrorCode::kParse, "letter out of range: " + std::to_string(letter));
  GroupElement e;
  e.word = {letter};
  if (letter == 2 * n) {
    e.transposed = true;
  } else {
    const GMat2& g = spec.generators[letter / 2];
    e.matrix = (letter % 2 == 0) ? g : mat_inv(g);
  }
  return e;
}

GroupElement compose(const GroupElement& x, const GroupElement& y) {
  GroupElement out;
  out.matrix = x.matrix * (x.transposed ? y.matrix.conj() : y.matrix);
  out.transposed = x.transposed != y.transposed;
  out.word = x.word;
  out.word.insert(out.word.end(), y.word.begin(), y.word.end());
  return out;
}

GroupElement compose(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  GroupElement out = compose(x, y);
  // Cancel adjacent inverse letters; the matrix is unchanged.
  std::vector<int> reduced;
  reduced.reserve(out.word.size());
  for (int l : out.word) {
    if (!reduced.empty() && reduced.back() == spec.inverse_letter(l)) {
      reduced.pop_back();
    } else {
      reduced.push_back(l);
    }
  }
  out.word = std::move(reduced);
  return out;
}

GroupElement inverse(const GroupSpec& spec, const GroupElement& x) {
  GroupElement out;
  // (M T^f)^-1 = T^f M^-1 = conj^f(M^-1) T^f.
  const GMat2 inv = mat_inv(x.matrix);
  out.matrix = x.transposed ? inv.conj() : inv;
  out.transposed = x.transposed;
  out.word.assign(x.word.rbegin(), x.word.rend());
  for (int& l : out.word) l = spec.inverse_letter(l);
  return out;
}

GroupElement replay(const GroupSpec& spec, const std::vector<int>& word) {
  GroupElement out;
  for (int l : word) out = compose(out, letter_element(spec, l));
  return out;
}

Point apply(const GroupElement& e, const Point& p) {
  return act(e.matrix, e.transposed ? transpose_action(p) : p);
}

double image_height(const GroupElement& e, const Point& p) {
  const cplx z = e.transposed ? std::conj(p.z()) : p.z();
  const cplx c = e.matrix.c().to_complex();
  const cplx d = e.matrix.d().to_complex();
  const double t = p.t();
  return t / (std::norm(c * z + d) + std::norm(c) * t * t);
}

bool admits(const GroupSpec& spec, const GroupElement& e) {
  return !spec.filter || spec.filter->admits(e.matrix);
}

bool is_trivial(const GroupElement& e) {
  return !e.transposed && is_projective_identity(e.matrix);
}

std::string word_to_string(const GroupSpec& spec, const std::vector<int>& word) {
  if (word.empty()) return "id";
  const int n = static_cast<int>(spec.generators.size());
  std::string s;
  for (int l : word) {
    if (!s.empty()) s += ' ';
    if (l == 2 * n) {
      s += 'T';
    } else {
      s += 'g' + std::to_string(l / 2);
      if (l % 2) s += "^-1";
    }
  }
  return s;
}

std::pair<GMat2, GMat2> whitehead_generators() {
  return {GMat2(1, kGaussI, 0, 1), GMat2(1, 0, kOnePlusI, 1)};
}

std::vector<GMat2> bianchi_generators() {
  return {GMat2(1, 1, 0, 1), GMat2(1, kGaussI, 0, 1), GMat2(0, -1, 1, 0),
          GMat2(kGaussI, 0, 0, 1)};
}

namespace {

GroupSpec make_spec(std::string name, std::vector<GMat2> gens, bool transpose = false) {
  GroupSpec s;
  s.name = std::move(name);
  s.generators = std::move(gens);
  s.include_transpose = transpose;
  return s;
}

std::vector<GroupSpec> build_registry() {
  std::vector<GroupSpec> r;
  const std::vector<GMat2> bianchi = bianchi_generators();
  const auto [w1, w2] = whitehead_generators();

  GroupSpec gamma = make_spec("gamma", bianchi);
  gamma.translation_scan_depth = 2;
  r.push_back(gamma);

  GroupSpec g2 = make_spec("gamma2", bianchi);
  g2.filter = ResidueFilter{2, {residue_class_key(GMat2::identity(), 2)}};
  g2.translation_scan_depth = 4;
  r.push_back(g2);

  GroupSpec g1pi = make_spec("gamma1pi", bianchi);
  g1pi.filter = ResidueFilter{kOnePlusI, {residue_class_key(GMat2::identity(), kOnePlusI)}};
  g1pi.translation_scan_depth = 4;
  r.push_back(g1pi);

  r.push_back(make_spec("whitehead", {w1, w2}));

  GroupSpec gt2 = g2;
  gt2.name = "gammaT2";
  gt2.include_transpose = true;
  r.push_back(gt2);

  GroupSpec lam = make_spec("lambda_group", bianchi, true);
  lam.filter = residue_closure({w1, w2}, 2);
  lam.translation_scan_depth = 4;
  r.push_back(lam);

  GroupSpec classical = make_spec("gamma2_classical", {GMat2(1, 2, 0, 1), GMat2(1, 0, 2, 1)});
  classical.real_slice = true;
  classical.translation_scan_depth = 2;
  r.push_back(classical);

  GroupSpec sl2z = make_spec("sl2z", {GMat2(1, 1, 0, 1), GMat2(0, -1, 1, 0)});
  sl2z.real_slice = true;
  sl2z.translation_scan_depth = 2;
  r.push_back(sl2z);
  return r;
}

const std::vector<GroupSpec>& registry() {
  static const std::vector<GroupSpec> r = build_registry();
  return r;
}

}  // namespace

const GroupSpec& group_spec(std::string_view name) {
  for (const GroupSpec& s : registry())
    if (s.name == name) return s;
  throw Error(ErrorCode::kUnknownName, "unknown group: " + std::string(name));
}

std::vector<std::string> group_names() {
  std::vector<std::string> out;
  for (const GroupSpec& s : registry()) out.push_back(s.name);
  return out;
}

namespace {

std::vector<int> random_reduced_word(const GroupSpec& spec, int max_len, std::mt19937_64& rng) {
  const int letters = spec.letter_count();
  std::uniform_int_distribution<int> len_dist(1, max_len);
  const int len = len_dist(rng);
  std::vector<int> w;
  w.reserve(len);
  for (int i = 0; i < len; ++i) {
    if (w.empty()) {
      w.push_back(std::uniform_int_distribution<int>(0, letters - 1)(rng));
    } else {
      // Uniform among letters other than the inverse of the previous one.
      const int forbidden = spec.inverse_letter(w.back());
      int l = std::uniform_int_distribution<int>(0, letters - 2)(rng);
      if (l >= forbidden) ++l;
      w.push_back(l);
    }
  }
  return w;
}

template <typename Accept>
std::vector<GroupElement> sample_words(const GroupSpec& spec, int count, int max_len,
                                       std::uint64_t seed, Accept accept) {
  if (max_len < 1 || spec.letter_count() < 2)
    throw Error(ErrorCode::kParse, "sampling needs max_len >= 1 and at least two letters");
  std::mt19937_64 rng(seed);
  std::vector<GroupElement> out;
  std::int64_t draws = 0;
  while (static_cast<int>(out.size()) < count) {
    if (draws >= kSamplingBudget)
      throw BudgetExhausted("sampling budget exhausted after " + std::to_string(draws) +
                                " draws with " + std::to_string(out.size()) + " of " +
                                std::to_string(count) + " elements",
                            std::move(out));
    ++draws;
    GroupElement e = replay(spec, random_reduced_word(spec, max_len, rng));
    if (is_trivial(e) || !admits(spec, e) || !accept(e)) continue;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<GroupElement> sample_congruence(const GroupSpec& spec, GaussInt modulus,
                                            int count, int max_len, std::uint64_t seed) {
  residue(0, modulus);  // validates the modulus
  return sample_words(spec, count, max_len, seed, [&](const GroupElement& e) {
    return is_congruent_scalar(e.matrix, modulus);
  });
}

std::vector<GroupElement> sample_elements(const GroupSpec& spec, int count, int max_len,
                                          std::uint64_t seed) {
  if (max_len < 1) throw Error(ErrorCode::kParse, "sampling needs max_len >= 1");
  const auto ball = word_ball(spec, max_len);
  if (ball->size() < 2)
    throw BudgetExhausted("no non-trivial element of " + spec.name + " within length " +
                              std::to_string(max_len),
                          {});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(1, ball->size() - 1);
  std::vector<GroupElement> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back((*ball)[pick(rng)]);
  return out;
}

std::shared_ptr<const std::vector<GroupElement>> word_ball(const GroupSpec& spec, int depth) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const std::vector<GroupElement>>> cache;
  const std::string key = spec_fingerprint(spec) + "#" + std::to_string(depth);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  std::vector<GroupElement> all{identity_element()};
  std::unordered_set<ElementKey, ElementKeyHash> seen{key_of(all[0])};
  std::size_t begin = 0;
  for (int level = 0; level < depth; ++level) {
    const std::size_t end = all.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int l = 0; l < spec.letter_count(); ++l) {
        if (!all[i].word.empty() && l == spec.inverse_letter(all[i].word.back())) continue;
        GroupElement next = compose(all[i], letter_element(spec, l));
        if (seen.insert(key_of(next)).second) all.push_back(std::move(next));
      }
    }
    begin = end;
  }
  auto ball = std::make_shared<std::vector<GroupElement>>();
  for (GroupElement& e : all)
    if (admits(spec, e)) ball->push_back(std::move(e));

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(ball));
  return it->second;
}

TranslationLattice discover_translations(const GroupSpec& spec, int scan_depth) {
  struct Vec {
    std::int64_t x, y;
    GroupElement e;
  };
  std::vector<Vec> vecs;
  for (const GroupElement& e : *word_ball(spec, scan_depth)) {
    const GMat2& m = e.matrix;
    if (e.transposed || !m.c().is_zero() || m.a() != m.d() || !m.a().is_unit()) continue;
    if (m.b().is_zero()) continue;
    const GaussInt v = m.b() * m.d().conj();  // z -> z + b / d
    vecs.push_back({v.re, v.im, e});
  }
  // Euclid on the first coordinate, then on the second among the rest.
  auto reduce = [&](Vec& target, const Vec& by, std::int64_t k) {
    target.x -= k * by.x;
    target.y -= k * by.y;
    target.e = compose(spec, target.e, power(spec, by.e, -k));
  };
  auto euclid = [&](std::vector<Vec>& vs, auto coord) -> std::optional<Vec> {
    while (true) {
      vs.erase(std::remove_if(vs.begin(), vs.end(),
                              [&](const Vec& v) { return v.x == 0 && v.y == 0; }),
               vs.end());
      std::size_t pivot = vs.size();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (coord(vs[i]) == 0) continue;
        if (pivot == vs.size() || std::llabs(coord(vs[i])) < std::llabs(coord(vs[pivot])))
          pivot = i;
      }
      if (pivot == vs.size()) return std::nullopt;
      bool changed = false;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i == pivot || coord(vs[i]) == 0) continue;
        const std::int64_t k = coord(vs[i]) / coord(vs[pivot]);
        reduce(vs[i], vs[pivot], k);
        changed = true;
      }
      if (!changed) {
        Vec p = vs[pivot];
        vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(pivot));
        return p;
      }
    }
  };
  TranslationLattice lattice;
  std::optional<Vec> px = euclid(vecs, [](const Vec& v) { return v.x; });
  std::optional<Vec> py = euclid(vecs, [](const Vec& v) { return v.y; });
  if (px && py) {
    // Shorten px by multiples of py.
    const std::int64_t k = static_cast<std::int64_t>(
        std::floor(static_cast<double>(px->y) / static_cast<double>(py->y) + 0.5));
    if (k != 0) reduce(*px, *py, k);
  }
  for (const std::optional<Vec>& v : {px, py}) {
    if (!v) continue;
    Vec u = *v;
    if (u.x < 0 || (u.x == 0 && u.y < 0)) {
      u.x = -u.x;
      u.y = -u.y;
      u.e = inverse(spec, u.e);
    }
    lattice.basis.push_back(GaussInt(u.x, u.y));
    lattice.elements.push_back(u.e);
  }
  return lattice;
}

namespace {

constexpr double kCellSlack = 1e-10;
constexpr double kAscentTolerance = 1e-9;
constexpr double kTieTolerance = 1e-9;

struct CellShift {
  GroupElement e;
  Point point;
};

CellShift translate_into_cell(const GroupSpec& spec, const TranslationLattice& lat,
                              const Point& p) {
  const cplx z = p.z();
  std::vector<std::int64_t> k(lat.basis.size(), 0);
  if (lat.basis.size() == 1) {
    const cplx v = lat.basis[0].to_complex();
    k[0] = static_cast<std::int64_t>(std::floor((z * std::conj(v)).real() / std::norm(v) +
                                                kCellSlack));
  } else if (lat.basis.size() == 2) {
    const cplx u = lat.basis[0].to_complex(), v = lat.basis[1].to_complex();
    const double det = u.real() * v.imag() - u.imag() * v.real();
    const double alpha = (z.real() * v.imag() - z.imag() * v.real()) / det;
    const double beta = (u.real() * z.imag() - u.imag() * z.real()) / det;
    k[0] = static_cast<std::int64_t>(std::floor(alpha + kCellSlack));
    k[1] = static_cast<std::int64_t>(std::floor(beta + kCellSlack));
  }
  GroupElement e = identity_element();
  cplx shift = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    e = compose(spec, e, power(spec, lat.elements[i], -k[i]));
    shift -= static_cast<double>(k[i]) * lat.basis[i].to_complex();
  }
  return {e, Point(z + shift, p.t())};
}

bool lex_less(const Point& a, const Point& b) {
  if (std::abs(a.z().real() - b.z().real()) > kTieTolerance) return a.z().real() < b.z().real();
  if (std::abs(a.z().imag() - b.z().imag()) > kTieTolerance) return a.z().imag() < b.z().imag();
  return false;
}

}  // namespace

ReductionResult reduce_to_fd(const Point& p, const GroupSpec& spec, int depth) {
  if (depth < 1) throw Error(ErrorCode::kParse, "reduction depth must be positive");
  const auto ball = word_ball(spec, depth);
  const TranslationLattice lat =
      discover_translations(spec, std::max(depth, spec.translation_scan_depth));

  GroupElement total = identity_element();
  Point cur = p;
  ReductionResult result{p, {}, {}, {p.t()}};
  constexpr int kMaxRounds = 10000;
  for (int round = 0; round < kMaxRounds; ++round) {
    CellShift s = translate_into_cell(spec, lat, cur);
    total = compose(spec, s.e, total);
    cur = s.point;
    std::size_t best = 0;
    double best_h = cur.t();
    for (std::size_t i = 1; i < ball->size(); ++i) {
      const double h = image_height((*ball)[i], cur);
      if (h > best_h) {
        best_h = h;
        best = i;
      }
    }
    if (best == 0 || best_h <= cur.t() * (1 + kAscentTolerance)) break;
    total = compose(spec, (*ball)[best], total);
    cur = apply((*ball)[best], cur);
    result.height_history.push_back(cur.t());
  }

  // Among images of (numerically) the same height, pick the one whose
  // base-cell translate is lexicographically smallest.
  const double floor_h = cur.t() * (1 - kTieTolerance);
  std::optional<CellShift> chosen;
  GroupElement chosen_e;
  for (const GroupElement& e : *ball) {
    if (image_height(e, cur) < floor_h) continue;
    CellShift s = translate_into_cell(spec, lat, apply(e, cur));
    if (!chosen || lex_less(s.point, chosen->point)) {
      chosen_e = e;
      chosen = std::move(s);
    }
  }
  total = compose(spec, chosen->e, compose(spec, chosen_e, total));
  result.point = chosen->point;
  result.element = total;
  result.word = total.word;
  return result;
}

std::vector<Point> orbit_points(const Point& p, const GroupSpec& spec, int max_len) {
  std::vector<Point> pts;
  for (const GroupElement& e : *word_ball(spec, max_len)) pts.push_back(apply(e, p));
  std::stable_sort(pts.begin(), pts.end(),
                   [](const Point& a, const Point& b) { return a.t() < b.t(); });
  constexpr double kTol = 1e-9;
  std::vector<Point> out;
  for (const Point& q : pts) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend() && q.t() - it->t() <= kTol; ++it) {
      if (std::abs(q.z() - it->z()) <= kTol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(q);
  }
  return out;
}

namespace {

// Image of a cusp as a Gaussian rational num/den (den == 0 means infinity).
std::pair<GaussInt, GaussInt> cusp_image(const GroupElement& e, const Cusp& s) {
  const GMat2& m = e.matrix;
  if (!s) return {m.a(), m.c()};
  const GaussInt x = e.transposed ? s->conj() : *s;
  return {m.a() * x + m.b(), m.c() * x + m.d()};
}

}  // namespace

std::optional<GroupElement> find_cusp_word(const GroupSpec& spec, const Cusp& from,
                                           const Cusp& to, int max_len) {
  for (const GroupElement& e : *word_ball(spec, max_len)) {
    const auto [num, den] = cusp_image(e, from);
    if (num.is_zero() && den.is_zero()) continue;
    const bool hit = to ? (!den.is_zero() && num == *to * den) : den.is_zero();
    if (hit) return e;
  }
  return std::nullopt;
}

}  // namespace wlc
