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

#ifndef WLC_EMBEDDINGS_H_
#define WLC_EMBEDDINGS_H_

// Maps out of hyperbolic 3-space built from theta constants: the
// octahedron map for Gamma^T(2), the quadric map for Lambda, the 256
// deeper characteristics, and an invariance-testing harness.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wlc/error.h"
#include "wlc/groups.h"
#include "wlc/halfspace.h"
#include "wlc/theta.h"

namespace wlc {

using CharTuple = std::array<ThetaChar, 4>;

struct OctaCoords {
  double t1 = 0, t2 = 0, t3 = 0;
  double l1_norm() const;
};

struct LambdaCoords {
  double l1 = 0, l2 = 0, l3 = 0, l4 = 0;
};

// |x0| at or below this is treated as a vanishing base point.
inline constexpr double kBasePointFloor = 1e-9;

// (x1, x2, x3) / x0 for theta_on_h3 values. Throws kBasePointVanishing.
std::array<double, 3> theta_ratios(const Point& p, const CharTuple& chars, double eps);
OctaCoords octa_map(const Point& p, const CharTuple& chars, double eps);
// (xi1^2 + xi2^2, xi1^2 xi2^2, xi3^2, xi1 xi2 xi3).
LambdaCoords lambda_from_ratios(const std::array<double, 3>& xi);
LambdaCoords lambda_map(const Point& p, const CharTuple& chars, double eps);

// Uniform z in [-1, 1]^2 (z real on the real slice), t in [0.5, 2].
std::vector<Point> random_points(int count, std::uint64_t seed, bool real_slice = false);

struct BaseThetaOptions {
  int word_len = 6;
  int reduce_depth = 4;
  double eps = 1e-12;
  double containment_slack = 1e-9;
};

class NoTupleFound : public Error {
 public:
  explicit NoTupleFound(const std::string& diagnostics)
      : Error(ErrorCode::kNoTupleFound, diagnostics) {}
};

// Ordered 4-tuples of non-vanishing level-(1+i) characteristics whose
// ratios are Gamma^T(2)-invariant within tol on `samples` points against
// `group_elems` sampled elements, and whose octahedron coordinates lie in
// |t1| + |t2| + |t3| <= 1 on reduced samples. Sorted; throws NoTupleFound
// with the nearest misses when empty.
std::vector<CharTuple> find_base_thetas(int samples, int group_elems, double tol,
                                        std::uint64_t seed,
                                        const BaseThetaOptions& options = {});

// The first tuple returned by find_base_thetas: with h = (1-i)/2,
// (th[0,0;0,0], th[0,h;h,0], th[h,0;0,h], th[h,h;h,h]). Used as the default
// for octa_* and lambda_*.
CharTuple default_base_tuple();

std::string to_string(const CharTuple& t);
// "c0|c1|c2|c3" with each slot in the characteristic grammar.
CharTuple parse_char_tuple(const std::string& s);

struct CatalogEntry {
  ThetaChar chars;
  bool odd = false;
  bool level_one_plus_i = false;
};

// The 256 characteristics with coordinates in {0, 1/2, i/2, (1+i)/2},
// annotated by the vanishing scan.
std::vector<CatalogEntry> deep_theta_catalog(int scan_samples = 20);

using PointFunction = std::function<std::complex<double>(const Point&)>;

// Function ids: const1, height, lambda1d (classical lambda of Re z + i t),
// octa_t1..octa_t3, lambda_l1..lambda_l4 (on `tuple`), and
// "expr:<expression>" (see expression.h). Throws kUnknownName.
PointFunction resolve_function(const std::string& id, double eps,
                               const CharTuple& tuple);
std::vector<std::string> function_ids();

struct InvarianceOptions {
  int max_word_len = 6;
  double eps = 1e-12;
  std::optional<CharTuple> tuple;
};

struct InvarianceReport {
  std::string function;
  std::string group;
  int samples = 0;
  int elements = 0;
  std::uint64_t seed = 0;
  double tol = 0;
  double max_abs_deviation = 0;
  Point worst_point{0, 1};
  std::string worst_word;
  bool passed() const { return max_abs_deviation < tol; }
};

// max |fn(g p) - fn(p)| over `samples` random points and `elems` sampled
// non-trivial elements of the group.
InvarianceReport invariance_test(const std::string& fn, const GroupSpec& spec, int samples,
                                 int elems, double tol, std::uint64_t seed,
                                 const InvarianceOptions& options = {});

}  // namespace wlc

#endif  // WLC_EMBEDDINGS_H_
