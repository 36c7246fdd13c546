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

#ifndef WLC_GROUPS_H_
#define WLC_GROUPS_H_

// Named subgroups of GL(2, Z[i]) (optionally extended by the transpose T),
// random words, congruence sampling and a bounded-search reduction toward
// a fundamental domain.
//
// Elements act as p -> M (T^f p). Composition is operational: in a word
// l1 l2 ... lk the rightmost letter acts first. Since T g = conj(g) T, the
// matrix part of (M, f) o (N, h) is M * (f ? conj(N) : N).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wlc/error.h"
#include "wlc/gaussian.h"
#include "wlc/halfspace.h"

namespace wlc {

// Residue classes of matrices modulo (m) and up to unit scalars.
struct ResidueFilter {
  GaussInt modulus;
  std::vector<GMat2> allowed;  // sorted class keys

  bool admits(const GMat2& g) const;
};

// min over units u of reduce_mod(u g, m).
GMat2 residue_class_key(const GMat2& g, GaussInt m);

// Closure of the residue classes of `generators` under multiplication.
ResidueFilter residue_closure(const std::vector<GMat2>& generators, GaussInt m);

struct GroupSpec {
  std::string name;
  std::vector<GMat2> generators;
  bool include_transpose = false;
  // When set, the group is the set of words in `generators` (and T) whose
  // matrix part lies in an allowed residue class. This is how congruence
  // subgroups are described without listing their generators.
  std::optional<ResidueFilter> filter;
  // Acts on the vertical half-plane {Im z = 0}, the upper half-plane model
  // of SL(2, Z).
  bool real_slice = false;
  // Word length scanned for translations fixing infinity.
  int translation_scan_depth = 8;

  // Letters 2k and 2k+1 are generator k and its inverse; letter
  // 2 * generators.size() is T when include_transpose is set.
  int letter_count() const;
  int inverse_letter(int letter) const;
};

struct GroupElement {
  GMat2 matrix = GMat2::identity();
  bool transposed = false;
  std::vector<int> word;
};

GroupElement identity_element();
GroupElement letter_element(const GroupSpec& spec, int letter);
// x o y: apply y first. The word is the concatenation.
GroupElement compose(const GroupElement& x, const GroupElement& y);
// Same, with adjacent inverse letters cancelled in the word.
GroupElement compose(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupSpec& spec, const GroupElement& x);
GroupElement replay(const GroupSpec& spec, const std::vector<int>& word);
Point apply(const GroupElement& e, const Point& p);
// Height of apply(e, p) without forming the point.
double image_height(const GroupElement& e, const Point& p);
// Membership under the GroupSpec filter (always true without one).
bool admits(const GroupSpec& spec, const GroupElement& e);
bool is_trivial(const GroupElement& e);
// "g0 g1^-1 T" style rendering.
std::string word_to_string(const GroupSpec& spec, const std::vector<int>& word);

// [[1, i], [0, 1]] and [[1, 0], [1+i, 1]].
std::pair<GMat2, GMat2> whitehead_generators();
// [[1,1],[0,1]], [[1,i],[0,1]], [[0,-1],[1,0]], [[i,0],[0,1]].
std::vector<GMat2> bianchi_generators();

// Registry: gamma, gamma2, gamma1pi, whitehead, gammaT2, lambda_group,
// gamma2_classical, sl2z. Throws kUnknownName.
const GroupSpec& group_spec(std::string_view name);
std::vector<std::string> group_names();

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& message, std::vector<GroupElement> partial)
      : Error(ErrorCode::kBudgetExhausted, message), partial_(std::move(partial)) {}
  const std::vector<GroupElement>& partial() const { return partial_; }

 private:
  std::vector<GroupElement> partial_;
};

inline constexpr std::int64_t kSamplingBudget = 1'000'000;

// Random freely reduced words (uniform length in [1, max_len], uniform
// letters) admitted by `spec` whose matrix is congruent to a unit scalar
// modulo `modulus` (1+i or 2). Projectively trivial, untransposed elements
// are skipped. Deterministic for a fixed seed.
std::vector<GroupElement> sample_congruence(const GroupSpec& spec, GaussInt modulus,
                                            int count, int max_len, std::uint64_t seed);

// Uniform draws (with replacement) from the non-identity elements of
// word_ball(spec, max_len). Short random words in a filtered group are
// mostly translations; drawing from the ball gives every element of
// length <= max_len the same weight.
std::vector<GroupElement> sample_elements(const GroupSpec& spec, int count, int max_len,
                                          std::uint64_t seed);

// Distinct elements (projectively, with the transpose flag) reachable with
// at most `depth` letters and admitted by `spec`, in breadth-first order
// starting with the identity. Each carries a shortest word. Cached.
std::shared_ptr<const std::vector<GroupElement>> word_ball(const GroupSpec& spec, int depth);

// Translations z -> z + v among the elements of `spec`, as a basis of rank
// 0, 1 or 2 with the element realising each basis vector.
struct TranslationLattice {
  std::vector<GaussInt> basis;
  std::vector<GroupElement> elements;
};

TranslationLattice discover_translations(const GroupSpec& spec, int scan_depth);

struct ReductionResult {
  Point point;
  std::vector<int> word;
  GroupElement element;
  // Heights along the ascent; nondecreasing.
  std::vector<double> height_history;
};

// Best-effort canonical orbit representative: repeatedly moves to the
// highest image under words of length <= depth (after translating into the
// base cell of the translation lattice), then breaks ties between images of
// equal height by translating into the base cell and taking the
// lexicographically smallest (Re z, Im z).
ReductionResult reduce_to_fd(const Point& p, const GroupSpec& spec, int depth);

// Images of p under all words of length <= max_len, deduplicated within
// 1e-9.
std::vector<Point> orbit_points(const Point& p, const GroupSpec& spec, int max_len);

// A boundary point of H^3: a Gaussian integer or infinity (nullopt).
using Cusp = std::optional<GaussInt>;

// Shortest word of length <= max_len mapping cusp `from` to cusp `to`.
std::optional<GroupElement> find_cusp_word(const GroupSpec& spec, const Cusp& from,
                                           const Cusp& to, int max_len);

}  // namespace wlc

#endif  // WLC_GROUPS_H_
