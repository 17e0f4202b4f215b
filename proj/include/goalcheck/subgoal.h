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

#ifndef GOALCHECK_SUBGOAL_H_
#define GOALCHECK_SUBGOAL_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goalcheck/predicate.h"
#include "goalcheck/quantity_expr.h"

namespace goalcheck {

// A checkable numeric target T_i lowered from one skeleton step.
struct SubGoal {
  int id = 0;
  QuantityExpr expr = QuantityExpr::Const(0.0);
  double expected = 0.0;
  QuantityKind kind = QuantityKind::kRatio;
  int source_step = 0;
  bool masked = false;

  // "T0", "T1", ...
  std::string Label() const { return "T" + std::to_string(id); }

  friend bool operator==(const SubGoal&, const SubGoal&) = default;
};

SubGoal CompilePredicate(const PredicateStep& step);

// Sub-goal i comes from step i, so the last sub-goal is the final goal.
// Throws ParseError for an empty skeleton.
std::vector<SubGoal> CompileSkeleton(const Skeleton& skeleton);

// Named coordinates of one instance. Signed areas are evaluated after
// uniformly rescaling the instance so its bounding box fits the unit square,
// which keeps a fixed tolerance meaningful at any drawing scale.
class PointMap {
 public:
  explicit PointMap(std::span<const PointDecl> points);

  // Throws EvalError when `name` is not declared.
  Point at(std::string_view name) const;
  // Largest bounding-box side; 0 when all points coincide.
  double extent() const { return extent_; }

 private:
  std::map<std::string, Point, std::less<>> points_;
  double extent_ = 0.0;
};

// Bottom-up evaluation. Angle kinds come back reduced into [0, 180); areas
// are in unit-box-normalized units. Throws EvalError on a degenerate segment,
// a zero-length denominator or a missing point.
double EvaluateExpr(const QuantityExpr& expr, const PointMap& points);
double EvaluateSubGoal(const SubGoal& goal, const PointMap& points);

// |value - expected| <= tol, or the mod-180 angle distance for angle kinds.
// The bound carries a few ulps of slack relative to the operands so that
// exact decimal boundaries (1.02 vs 1 at 0.02) are inclusive.
bool WithinTolerance(double value, double expected, QuantityKind kind, double tol);

bool CheckSatisfaction(const SubGoal& goal, const PointMap& points, double tol);

// One line per sub-goal: `T<i> <kind> <expected> <expression>`.
std::string SerializeSubGoals(std::span<const SubGoal> goals);
// Inverse of SerializeSubGoals; source_step is taken from the id.
std::vector<SubGoal> ParseSubGoals(std::string_view text);

}  // namespace goalcheck

#endif  // GOALCHECK_SUBGOAL_H_
