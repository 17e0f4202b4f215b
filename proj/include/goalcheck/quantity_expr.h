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

#ifndef GOALCHECK_QUANTITY_EXPR_H_
#define GOALCHECK_QUANTITY_EXPR_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "goalcheck/geometry.h"

namespace goalcheck {

// Immutable expression tree over named points. Children are shared, so copies
// are cheap. Every factory checks the kind rules, so an existing QuantityExpr
// always type-checks:
//
//   len(A,B)        -> length        angle(A,B,C,D) -> angle
//   area(A,B,C)     -> area          const(v)       -> ratio
//   div(length, length) and div(ratio, ratio)       -> ratio
//   add/sub(angle, angle)                           -> angle_combo
class QuantityExpr {
 public:
  enum class Op { kSegLength, kDirAngle, kSignedArea, kDiv, kSub, kAdd, kConst };

  static constexpr int kMaxDepth = 4;

  static QuantityExpr SegLength(std::string a, std::string b);
  static QuantityExpr DirAngle(std::string a, std::string b, std::string c,
                               std::string d);
  static QuantityExpr SignedArea(std::string a, std::string b, std::string c);
  static QuantityExpr Const(double value);
  static QuantityExpr Div(QuantityExpr num, QuantityExpr den);
  static QuantityExpr Sub(QuantityExpr lhs, QuantityExpr rhs);
  static QuantityExpr Add(QuantityExpr lhs, QuantityExpr rhs);

  // Inverse of Serialize(). Throws ParseError.
  static QuantityExpr Parse(std::string_view text);

  Op op() const { return op_; }
  QuantityKind kind() const { return kind_; }
  int depth() const { return depth_; }
  // Point operands of a leaf; empty for interior nodes and constants.
  const std::vector<std::string>& points() const { return points_; }
  double constant() const { return constant_; }
  // Only valid for kDiv, kSub, kAdd.
  const QuantityExpr& lhs() const { return *lhs_; }
  const QuantityExpr& rhs() const { return *rhs_; }

  // Machine form, e.g. "div(len(A,B),len(C,D))".
  std::string Serialize() const;
  // Human form for prompts, e.g. "|AB|/|CD|" or "∠(AB,CD) - ∠(EF,GH)".
  std::string Display() const;

  // Every point name in the tree, in first-appearance order, deduplicated.
  std::vector<std::string> ReferencedPoints() const;

  friend bool operator==(const QuantityExpr& a, const QuantityExpr& b);

 private:
  QuantityExpr() = default;
  static QuantityExpr Binary(Op op, QuantityExpr lhs, QuantityExpr rhs);

  Op op_ = Op::kConst;
  QuantityKind kind_ = QuantityKind::kRatio;
  int depth_ = 1;
  std::vector<std::string> points_;
  double constant_ = 0.0;
  std::shared_ptr<const QuantityExpr> lhs_;
  std::shared_ptr<const QuantityExpr> rhs_;
};

}  // namespace goalcheck

#endif  // GOALCHECK_QUANTITY_EXPR_H_
