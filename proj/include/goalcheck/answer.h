// Copyright 2026 The Goalcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Numeric answer language and a deterministic equivalence checker.
//
// Accepted forms: integers and decimals, fractions, unary minus, + - * /
// (also × ÷ · −), parentheses (or braces), sqrt(x), √x, \sqrt{x}, and
// implicit products such as 2√3 or 3(1+√2). Trailing unit words and degree
// signs are dropped ("10 km", "90°"); any other prose makes the answer
// unparseable, and an unparseable answer is an incorrect answer.

#ifndef GOALCHECK_ANSWER_H_
#define GOALCHECK_ANSWER_H_

#include <memory>
#include <string>
#include <string_view>

#include "goalcheck/geometry.h"
#include "goalcheck/subgoal.h"

namespace goalcheck {

struct EquivalenceConfig {
  // Absolute tolerance, inclusive.
  double tol = 0.02;
  // Modulus for angle kinds; fixed.
  static constexpr double kAngleModulus = 180.0;
};

class AnswerExpr {
 public:
  enum class Op { kNumber, kNeg, kAdd, kSub, kMul, kDiv, kSqrt };

  struct Node {
    Op op = Op::kNumber;
    double number = 0.0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;  // unused by kNeg and kSqrt
  };

  // Wraps a plain value, e.g. a sub-goal's expected value.
  static AnswerExpr FromValue(double value);

  double value() const { return value_; }
  const Node& ast() const { return *root_; }
  // Fully parenthesized ASCII rendering of the tree.
  std::string ToString() const;

 private:
  friend AnswerExpr ParseAnswer(std::string_view text);
  AnswerExpr(std::shared_ptr<const Node> root, double value)
      : root_(std::move(root)), value_(value) {}

  std::shared_ptr<const Node> root_;
  double value_;
};

// Drops trailing unit words, degree signs and surrounding whitespace.
std::string_view StripUnits(std::string_view text);

// Throws ParseError for text outside the grammar and EvalError for division
// by zero, sqrt of a negative number or a non-finite result.
AnswerExpr ParseAnswer(std::string_view text);

// Angle kinds compare by mod-180 distance, all other kinds by absolute
// difference; both inclusive of tol.
bool Equivalent(const AnswerExpr& a, const AnswerExpr& b, QuantityKind kind,
                const EquivalenceConfig& cfg = {});

// Total: returns false, never throws, when `predicted` does not parse.
bool Verify(std::string_view predicted, const SubGoal& truth,
            const EquivalenceConfig& cfg = {});

}  // namespace goalcheck

#endif  // GOALCHECK_ANSWER_H_
