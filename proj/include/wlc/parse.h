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

#ifndef WLC_PARSE_H_
#define WLC_PARSE_H_

// Text grammars shared by the CLI and the expression language. Every parse
// failure throws Error(kParse) with a message quoting the grammar.

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "wlc/gaussian.h"
#include "wlc/groups.h"
#include "wlc/halfspace.h"
#include "wlc/hypergeometric.h"
#include "wlc/theta.h"

namespace wlc {

// "3", "-2", "i", "-i", "2i", "1+1i", "1-i".
GaussInt parse_gauss_int(std::string_view s);
// "(a+bi)/2" or a Gaussian integer.
GaussHalf parse_gauss_half(std::string_view s);
// "a1,a2;b1,b2", each slot a GaussHalf literal.
ThetaChar parse_theta_char(std::string_view s);
// "[[a,b],[c,d]]" with Gaussian integer entries.
GMat2 parse_gmat2(std::string_view s);
// "re,im,t".
Point parse_point(std::string_view s);
// "1.5", "-2i", "0.25+3i", "1e-3-2.5i", "i".
std::complex<double> parse_complex(std::string_view s);
// "t11,t12;t21,t22" with complex entries.
TauMat parse_tau(std::string_view s);
// Integer >= 2 or "inf".
TriangleIndex parse_triangle_index(std::string_view s);
// "inf" or a Gaussian integer.
Cusp parse_cusp(std::string_view s);
// Letters separated by spaces: "g0 g1^-1 T"; "id" is the empty word.
std::vector<int> parse_word(const GroupSpec& spec, std::string_view s);

std::string to_string(const Cusp& c);

// Trims ASCII whitespace.
std::string_view trim(std::string_view s);
// Splits on a delimiter at bracket/parenthesis depth zero.
std::vector<std::string_view> split_top_level(std::string_view s, char delim);

}  // namespace wlc

#endif  // WLC_PARSE_H_
