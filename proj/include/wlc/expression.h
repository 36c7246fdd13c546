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

#ifndef WLC_EXPRESSION_H_
#define WLC_EXPRESSION_H_

// Rational expressions in theta constants, e.g.
//   th[(1-1i)/2,0;0,(1-1i)/2]^2 / th[0,0;0,0]^2 - 1
// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := number | 'th[' characteristic ']' | '(' expr ')'

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wlc/halfspace.h"
#include "wlc/theta.h"

namespace wlc {

class Expression {
 public:
  // Throws kParse.
  static Expression parse(std::string_view text);

  // Thetas are evaluated once per call; division by zero raises
  // kSingularDenominator.
  std::complex<double> evaluate(const Point& p, double eps) const;

  const std::vector<ThetaChar>& thetas() const { return thetas_; }
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::vector<ThetaChar> thetas_;
  std::shared_ptr<const Node> root_;
};

}  // namespace wlc

#endif  // WLC_EXPRESSION_H_
