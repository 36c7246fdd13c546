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

#include "wlc/parse.h"

#include <charconv>
#include <cstdlib>
#include <optional>

#include "wlc/error.h"

namespace wlc {

namespace {

[[noreturn]] void fail(std::string_view what, std::string_view grammar, std::string_view s) {
  throw Error(ErrorCode::kParse, "cannot parse " + std::string(what) + " '" + std::string(s) +
                                     "': expected " + std::string(grammar));
}

std::optional<std::int64_t> to_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::optional<double> to_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) return std::nullopt;
  return v;
}

// Splits "x+yi" into a real part and an imaginary coefficient, both as
// text. The imaginary part is empty when there is no trailing 'i'.
struct ComplexText {
  std::string_view re, im;
  bool has_im = false;
};

ComplexText split_complex(std::string_view s) {
  ComplexText out;
  if (s.empty() || s.back() != 'i') {
    out.re = s;
    return out;
  }
  out.has_im = true;
  s.remove_suffix(1);
  std::size_t cut = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  if (cut == std::string_view::npos) {
    out.im = s;
  } else {
    out.re = s.substr(0, cut);
    out.im = s.substr(cut);
  }
  return out;
}

std::string imag_coefficient(std::string_view im) {
  if (im.empty() || im == "+") return "1";
  if (im == "-") return "-1";
  return std::string(im);
}

constexpr std::string_view kGaussGrammar = "a Gaussian integer like 3, -i, 1+2i or 1-1i";
constexpr std::string_view kHalfGrammar = "a Gaussian integer or (a+bi)/2";
constexpr std::string_view kCharGrammar =
    "\"a1,a2;b1,b2\" with GaussHalf slots, e.g. \"(1-1i)/2,0;0,0\"";
constexpr std::string_view kMatGrammar = "[[a,b],[c,d]] with Gaussian integer entries";
constexpr std::string_view kPointGrammar = "\"re,im,t\" with t > 0";
constexpr std::string_view kComplexGrammar = "a complex number like 0.5, 2i or 1.5-0.25i";
constexpr std::string_view kTauGrammar = "\"t11,t12;t21,t22\" with complex entries";

}  // namespace

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s, char delim) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char ch = s[k];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == delim && depth == 0) {
      parts.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

GaussInt parse_gauss_int(std::string_view s) {
  const std::string_view t = trim(s);
  const ComplexText parts = split_complex(t);
  GaussInt out;
  if (!parts.re.empty()) {
    auto re = to_int(parts.re);
    if (!re) fail("Gaussian integer", kGaussGrammar, s);
    out.re = *re;
  } else if (!parts.has_im) {
    fail("Gaussian integer", kGaussGrammar, s);
  }
  if (parts.has_im) {
    auto im = to_int(imag_coefficient(parts.im));
    if (!im) fail("Gaussian integer", kGaussGrammar, s);
    out.im = *im;
  }
  return out;
}

GaussHalf parse_gauss_half(std::string_view s) {
  const std::string_view t = trim(s);
  if (!t.empty() && t.front() == '(') {
    const std::size_t close = t.find(')');
    if (close == std::string_view::npos || trim(t.substr(close + 1)) != "/2")
      fail("GaussHalf", kHalfGrammar, s);
    return GaussHalf(parse_gauss_int(t.substr(1, close - 1)));
  }
  if (t.size() > 2 && t.substr(t.size() - 2) == "/2") return GaussHalf(parse_gauss_int(t.substr(0, t.size() - 2)));
  try {
    return GaussHalf::from_int(parse_gauss_int(t));
  } catch (const Error&) {
    fail("GaussHalf", kHalfGrammar, s);
  }
}

ThetaChar parse_theta_char(std::string_view s) {
  const auto halves = split_top_level(trim(s), ';');
  if (halves.size() != 2) fail("characteristic", kCharGrammar, s);
  ThetaChar c;
  for (int h = 0; h < 2; ++h) {
    const auto slots = split_top_level(halves[h], ',');
    if (slots.size() != 2) fail("characteristic", kCharGrammar, s);
    try {
      for (int k = 0; k < 2; ++k) (h == 0 ? c.a : c.b)[k] = parse_gauss_half(slots[k]);
    } catch (const Error&) {
      fail("characteristic", kCharGrammar, s);
    }
  }
  return c;
}

GMat2 parse_gmat2(std::string_view s) {
  std::string_view t = trim(s);
  if (t.size() < 4 || t.front() != '[' || t.back() != ']') fail("matrix", kMatGrammar, s);
  const auto rows = split_top_level(t.substr(1, t.size() - 2), ',');
  if (rows.size() != 2) fail("matrix", kMatGrammar, s);
  GMat2 g;
  for (int r = 0; r < 2; ++r) {
    std::string_view row = rows[r];
    if (row.size() < 2 || row.front() != '[' || row.back() != ']') fail("matrix", kMatGrammar, s);
    const auto cells = split_top_level(row.substr(1, row.size() - 2), ',');
    if (cells.size() != 2) fail("matrix", kMatGrammar, s);
    try {
      for (int k = 0; k < 2; ++k) g.e[2 * r + k] = parse_gauss_int(cells[k]);
    } catch (const Error&) {
      fail("matrix", kMatGrammar, s);
    }
  }
  return g;
}

Point parse_point(std::string_view s) {
  const auto parts = split_top_level(trim(s), ',');
  if (parts.size() != 3) fail("point", kPointGrammar, s);
  double v[3];
  for (int k = 0; k < 3; ++k) {
    auto d = to_double(parts[k]);
    if (!d) fail("point", kPointGrammar, s);
    v[k] = *d;
  }
  return Point(cplx(v[0], v[1]), v[2]);
}

std::complex<double> parse_complex(std::string_view s) {
  const std::string_view t = trim(s);
  const ComplexText parts = split_complex(t);
  double re = 0, im = 0;
  if (!parts.re.empty()) {
    auto d = to_double(parts.re);
    if (!d) fail("complex number", kComplexGrammar, s);
    re = *d;
  } else if (!parts.has_im) {
    fail("complex number", kComplexGrammar, s);
  }
  if (parts.has_im) {
    auto d = to_double(imag_coefficient(parts.im));
    if (!d) fail("complex number", kComplexGrammar, s);
    im = *d;
  }
  return {re, im};
}

TauMat parse_tau(std::string_view s) {
  const auto rows = split_top_level(trim(s), ';');
  if (rows.size() != 2) fail("tau", kTauGrammar, s);
  std::complex<double> e[4];
  for (int r = 0; r < 2; ++r) {
    const auto cells = split_top_level(rows[r], ',');
    if (cells.size() != 2) fail("tau", kTauGrammar, s);
    try {
      for (int k = 0; k < 2; ++k) e[2 * r + k] = parse_complex(cells[k]);
    } catch (const Error&) {
      fail("tau", kTauGrammar, s);
    }
  }
  return TauMat(e[0], e[1], e[2], e[3]);
}

TriangleIndex parse_triangle_index(std::string_view s) {
  const std::string_view t = trim(s);
  if (t == "inf") return std::nullopt;
  auto v = to_int(t);
  if (!v || *v < 2 || *v > 1'000'000) fail("triangle index", "an integer >= 2 or inf", s);
  return static_cast<int>(*v);
}

Cusp parse_cusp(std::string_view s) {
  const std::string_view t = trim(s);
  if (t == "inf") return std::nullopt;
  try {
    return parse_gauss_int(t);
  } catch (const Error&) {
    fail("cusp", "inf or a Gaussian integer", s);
  }
}

std::string to_string(const Cusp& c) { return c ? to_string(*c) : "inf"; }

std::vector<int> parse_word(const GroupSpec& spec, std::string_view s) {
  constexpr std::string_view kWordGrammar = "letters like \"g0 g1^-1 T\" or \"id\"";
  std::vector<int> word;
  const std::string_view t = trim(s);
  if (t == "id" || t.empty()) return word;
  const int n = static_cast<int>(spec.generators.size());
  std::size_t pos = 0;
  while (pos < t.size()) {
    while (pos < t.size() && t[pos] == ' ') ++pos;
    std::size_t end = t.find(' ', pos);
    if (end == std::string_view::npos) end = t.size();
    std::string_view tok = t.substr(pos, end - pos);
    pos = end;
    if (tok.empty()) continue;
    if (tok == "T") {
      if (!spec.include_transpose) fail("word", "no T letter in group " + spec.name, s);
      word.push_back(2 * n);
      continue;
    }
    if (tok.front() != 'g') fail("word", kWordGrammar, s);
    tok.remove_prefix(1);
    bool inv = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inv = true;
      tok.remove_suffix(3);
    }
    auto k = to_int(tok);
    if (!k || *k < 0 || *k >= n) fail("word", kWordGrammar, s);
    word.push_back(2 * static_cast<int>(*k) + (inv ? 1 : 0));
  }
  return word;
}

}  // namespace wlc
