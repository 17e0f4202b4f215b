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

#include "goalcheck/subgoal.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "goalcheck/error.h"
#include "goalcheck/numeric_text.h"

namespace goalcheck {

SubGoal CompilePredicate(const PredicateStep& step) {
  const CatalogEntry* entry = FindPredicate(step.predicate);
  if (entry == nullptr) {
    throw Error("unknown predicate '" + step.predicate + "'");
  }
  LoweredTarget target = entry->lower(step.PointArgs(), step.NumberArgs());
  SubGoal goal;
  goal.id = step.index;
  goal.kind = target.expr.kind();
  goal.expr = std::move(target.expr);
  goal.expected = target.expected;
  goal.source_step = step.index;
  return goal;
}

std::vector<SubGoal> CompileSkeleton(const Skeleton& skeleton) {
  if (skeleton.steps.empty()) throw ParseError("empty skeleton");
  std::vector<SubGoal> goals;
  goals.reserve(skeleton.steps.size());
  for (size_t i = 0; i < skeleton.steps.size(); ++i) {
    SubGoal goal = CompilePredicate(skeleton.steps[i]);
    goal.id = static_cast<int>(i);
    goal.source_step = static_cast<int>(i);
    goals.push_back(std::move(goal));
  }
  return goals;
}

PointMap::PointMap(std::span<const PointDecl> points) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& p : points) {
    points_[p.name] = p.at;
    min_x = std::min(min_x, p.at.x);
    max_x = std::max(max_x, p.at.x);
    min_y = std::min(min_y, p.at.y);
    max_y = std::max(max_y, p.at.y);
  }
  if (!points.empty()) extent_ = std::max(max_x - min_x, max_y - min_y);
}

Point PointMap::at(std::string_view name) const {
  auto it = points_.find(name);
  if (it == points_.end()) {
    throw EvalError("missing point '" + std::string(name) + "'");
  }
  return it->second;
}

double EvaluateExpr(const QuantityExpr& expr, const PointMap& points) {
  const auto& p = expr.points();
  switch (expr.op()) {
    case QuantityExpr::Op::kSegLength:
      return SegmentLength(points.at(p[0]), points.at(p[1])).value;
    case QuantityExpr::Op::kDirAngle:
      return DirectedAngle(points.at(p[0]), points.at(p[1]), points.at(p[2]),
                           points.at(p[3]))
          .value;
    case QuantityExpr::Op::kSignedArea: {
      const double area =
          SignedArea(points.at(p[0]), points.at(p[1]), points.at(p[2])).value;
      const double s = points.extent();
      return s > 0.0 ? area / (s * s) : 0.0;
    }
    case QuantityExpr::Op::kConst:
      return expr.constant();
    case QuantityExpr::Op::kDiv: {
      const double num = EvaluateExpr(expr.lhs(), points);
      const double den = EvaluateExpr(expr.rhs(), points);
      if (den == 0.0) {
        throw EvalError("zero-length denominator in " + expr.Display());
      }
      return num / den;
    }
    case QuantityExpr::Op::kSub:
      return ReduceMod180(EvaluateExpr(expr.lhs(), points) -
                          EvaluateExpr(expr.rhs(), points));
    case QuantityExpr::Op::kAdd:
      return ReduceMod180(EvaluateExpr(expr.lhs(), points) +
                          EvaluateExpr(expr.rhs(), points));
  }
  throw EvalError("unhandled expression");
}

double EvaluateSubGoal(const SubGoal& goal, const PointMap& points) {
  return EvaluateExpr(goal.expr, points);
}

bool WithinTolerance(double value, double expected, QuantityKind kind,
                     double tol) {
  // A few ulps of slack so decimal boundary cases such as 1.02 vs 1 at
  // tol 0.02 compare as equal to the threshold, i.e. inclusively.
  const double slack =
      8.0 * std::numeric_limits<double>::epsilon() *
      std::max({1.0, std::abs(value), std::abs(expected)});
  const double distance = IsAngular(kind) ? AngleDistance(value, expected)
                                          : std::abs(value - expected);
  return distance <= tol + slack;
}

bool CheckSatisfaction(const SubGoal& goal, const PointMap& points, double tol) {
  return WithinTolerance(EvaluateSubGoal(goal, points), goal.expected,
                         goal.kind, tol);
}

std::string SerializeSubGoals(std::span<const SubGoal> goals) {
  std::string out;
  for (const auto& g : goals) {
    out += g.Label() + " " + std::string(KindName(g.kind)) + " " +
           FormatNumber(g.expected) + " " + g.expr.Serialize() + "\n";
  }
  return out;
}

std::vector<SubGoal> ParseSubGoals(std::string_view text) {
  std::vector<SubGoal> goals;
  int line_no = 0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty()) continue;
    try {
      std::vector<std::string_view> head;
      for (int i = 0; i < 3; ++i) {
        const size_t sp = line.find(' ');
        if (sp == std::string_view::npos) throw ParseError("truncated sub-goal");
        head.push_back(line.substr(0, sp));
        line = Trim(line.substr(sp + 1));
      }
      if (head[0].size() < 2 || head[0][0] != 'T') {
        throw ParseError("sub-goal id must look like T<i>");
      }
      const auto id = ParseNumber(head[0].substr(1));
      if (!id || *id != std::floor(*id) || *id < 0) {
        throw ParseError("bad sub-goal id '" + std::string(head[0]) + "'");
      }
      const auto expected = ParseNumber(head[2]);
      if (!expected) throw ParseError("bad expected value");
      SubGoal goal;
      goal.id = static_cast<int>(*id);
      goal.source_step = goal.id;
      goal.kind = KindFromName(head[1]);
      goal.expected = *expected;
      goal.expr = QuantityExpr::Parse(line);
      if (goal.expr.kind() != goal.kind) {
        throw ParseError("declared kind does not match expression kind");
      }
      goals.push_back(std::move(goal));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return goals;
}

}  // namespace goalcheck
