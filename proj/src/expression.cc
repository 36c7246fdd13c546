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

#include "wlc/expression.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "wlc/error.h"
#include "wlc/parse.h"

namespace wlc {

struct Expression::Node {
  enum Kind { kNumber, kTheta, kAdd, kSub, kMul, kDiv, kNeg, kPow } kind;
  std::complex<double> number;
  int theta = -1;
  int exponent = 0;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

class Parser {
 public:
  Parser(std::string_view text, std::vector<ThetaChar>& thetas) : s_(text), thetas_(thetas) {}

  NodePtr parse_all() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw Error(ErrorCode::kParse, "expression '" + std::string(s_) + "' at offset " +
                                       std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr binary(Node::Kind k, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  NodePtr expr() {
    NodePtr n = term();
    while (true) {
      if (accept('+')) n = binary(Node::kAdd, n, term());
      else if (accept('-')) n = binary(Node::kSub, n, term());
      else return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    while (true) {
      if (accept('*')) n = binary(Node::kMul, n, unary());
      else if (accept('/')) n = binary(Node::kDiv, n, unary());
      else return n;
    }
  }

  NodePtr unary() {
    if (accept('-')) return binary(Node::kNeg, unary(), nullptr);
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-") error("expected an integer exponent");
    auto n = std::make_shared<Node>();
    n->kind = Node::kPow;
    n->lhs = std::move(base);
    n->exponent = std::atoi(digits.c_str());
    if (digits.size() > 3 || std::abs(n->exponent) > 64) error("exponent out of range [-64, 64]");
    return n;
  }

  NodePtr atom() {
    skip();
    if (accept('(')) {
      NodePtr n = expr();
      if (!accept(')')) error("expected ')'");
      return n;
    }
    if (s_.substr(pos_, 3) == "th[") {
      pos_ += 3;
      const std::size_t close = s_.find(']', pos_);
      if (close == std::string_view::npos) error("unterminated th[");
      const ThetaChar c = parse_theta_char(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
      auto it = std::find(thetas_.begin(), thetas_.end(), c);
      auto n = std::make_shared<Node>();
      n->kind = Node::kTheta;
      n->theta = static_cast<int>(it - thetas_.begin());
      if (it == thetas_.end()) thetas_.push_back(c);
      return n;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
            ((s_[pos_] == 'e' || s_[pos_] == 'E') && pos_ > start) ||
            ((s_[pos_] == '-' || s_[pos_] == '+') && pos_ > start &&
             (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
      ++pos_;
    if (pos_ == start) error("expected a number, th[...] or '('");
    const std::string num(s_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(num.c_str(), &end);
    if (end != num.c_str() + num.size()) error("bad number '" + num + "'");
    auto n = std::make_shared<Node>();
    n->kind = Node::kNumber;
    n->number = v;
    return n;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<ThetaChar>& thetas_;
};

std::complex<double> eval(const Node& n, const std::vector<std::complex<double>>& th) {
  switch (n.kind) {
    case Node::kNumber: return n.number;
    case Node::kTheta: return th[n.theta];
    case Node::kAdd: return eval(*n.lhs, th) + eval(*n.rhs, th);
    case Node::kSub: return eval(*n.lhs, th) - eval(*n.rhs, th);
    case Node::kMul: return eval(*n.lhs, th) * eval(*n.rhs, th);
    case Node::kNeg: return -eval(*n.lhs, th);
    case Node::kDiv: {
      const std::complex<double> d = eval(*n.rhs, th);
      if (d == 0.0) throw Error(ErrorCode::kSingularDenominator, "division by zero");
      return eval(*n.lhs, th) / d;
    }
    case Node::kPow: {
      const std::complex<double> b = eval(*n.lhs, th);
      if (n.exponent < 0 && b == 0.0)
        throw Error(ErrorCode::kSingularDenominator, "zero to a negative power");
      std::complex<double> r = 1;
      for (int k = 0; k < std::abs(n.exponent); ++k) r *= b;
      return n.exponent < 0 ? 1.0 / r : r;
    }
  }
  return 0;
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.text_ = std::string(text);
  e.root_ = Parser(e.text_, e.thetas_).parse_all();
  return e;
}

std::complex<double> Expression::evaluate(const Point& p, double eps) const {
  std::vector<std::complex<double>> th;
  th.reserve(thetas_.size());
  for (const ThetaChar& c : thetas_) th.push_back(theta_on_h3_complex(c, p, eps));
  return eval(*root_, th);
}

}  // namespace wlc
