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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <string>

#include "goalcheck/error.h"

namespace goalcheck {
namespace {

struct Expected {
  std::string term;
  std::string expr;
  double value;
  QuantityKind kind;
};

// The mapping rules transcribed by hand, one per catalog entry, in the
// machine serialization: len(A,B) is |AB|, angle(A,B,C,D) is the directed
// angle between lines AB and CD, area(A,B,C) the signed area.
const std::vector<Expected>& MappingTable() {
  using K = QuantityKind;
  static const std::vector<Expected> table = {
      {"cong[A,B,C,D]", "div(len(A,B),len(C,D))", 1, K::kRatio},
      {"eqratio[A,B,C,D,E,F,G,H]", "div(div(len(A,B),len(C,D)),div(len(E,F),len(G,H)))", 1,
       K::kRatio},
      {"eqangle[P0,P1,P2,P3,P4,P5,P6,P7]", "sub(angle(P0,P1,P2,P3),angle(P4,P5,P6,P7))", 0,
       K::kAngleCombo},
      {"para[A,B,C,D]", "angle(A,B,C,D)", 0, K::kAngle},
      {"perp[A,B,C,D]", "angle(A,B,C,D)", 90, K::kAngle},
      {"cyclic[A,B,C,D]", "add(angle(A,B,C,B),angle(A,D,C,D))", 180, K::kAngleCombo},
      {"on_circle[X,O,A]", "div(len(O,X),len(O,A))", 1, K::kRatio},
      {"lc_tangent[X,A,O]", "angle(A,X,A,O)", 90, K::kAngle},
      {"simtrir[A,B,C,D,E,F]", "sub(angle(A,B,B,C),angle(D,E,E,F))", 0, K::kAngleCombo},
      {"coll[A,B,C]", "area(A,B,C)", 0, K::kArea},
      {"on_line[X,A,B]", "angle(A,X,X,B)", 0, K::kAngle},
      {"rconst[A,B,C,X,0.5]", "div(len(A,B),len(C,X))", 0.5, K::kRatio},
      {"rconst2[X,A,B,2]", "div(len(A,X),len(B,X))", 2, K::kRatio},
      {"aconst[A,B,C,X,30]", "angle(A,B,C,X)", 30, K::kAngle},
      {"s_angle[A,B,X,45]", "angle(A,B,B,X)", 45, K::kAngle},
      {"lconst[A,X,3]", "len(A,X)", 3, K::kLength},
      {"midp[M,A,B]", "div(len(A,M),len(M,B))", 1, K::kRatio},
      {"ieq_triangle[A,B,C]", "angle(A,B,B,C)", 60, K::kAngle},
      {"iso_triangle[A,B,C]", "div(len(A,B),len(A,C))", 1, K::kRatio},
      {"r_triangle[A,B,C]", "angle(A,B,A,C)", 90, K::kAngle},
      {"triangle12[A,B,C]", "div(len(A,B),len(A,C))", 0.5, K::kRatio},
      {"risos[A,B,C]", "angle(A,B,A,C)", 90, K::kAngle},
      {"nsquare[X,A,B]", "angle(X,A,X,B)", 90, K::kAngle},
      {"rectangle[A,B,C,D]", "angle(A,B,B,C)", 90, K::kAngle},
      {"square[A,B,X,Y]", "angle(A,B,A,X)", 90, K::kAngle},
      {"trapezoid[A,B,C,D]", "angle(A,B,C,D)", 0, K::kAngle},
      {"r_trapezoid[A,B,C,D]", "angle(A,B,A,D)", 90, K::kAngle},
      {"eq_quadrangle[A,B,C,D]", "div(len(A,D),len(B,C))", 1, K::kRatio},
      {"eqdia_quadrangle[A,B,C,D]", "div(len(A,C),len(B,D))", 1, K::kRatio},
      {"psquare[X,A,B]", "angle(A,B,A,X)", 90, K::kAngle},
      {"on_pline[X,A,B,C]", "angle(A,X,B,C)", 0, K::kAngle},
      {"on_tline[X,A,B,C]", "angle(A,X,B,C)", 90, K::kAngle},
      {"on_bline[X,A,B]", "div(len(X,A),len(X,B))", 1, K::kRatio},
      {"on_dia[X,A,B]", "angle(A,X,B,X)", 90, K::kAngle},
      {"on_aline[X,A,B,C,D,E]", "sub(angle(B,A,A,X),angle(E,D,D,C))", 0, K::kAngleCombo},
      {"reflect[X,A,B,C]", "sub(angle(B,A,B,C),angle(C,B,C,X))", 0, K::kAngleCombo},
      {"eqangle2[X,A,B,C]", "sub(angle(A,X,X,B),angle(C,X,X,A))", 0, K::kAngleCombo},
      {"eqangle3[X,A,B,D,E,F]", "sub(angle(A,X,X,B),angle(D,E,E,F))", 0, K::kAngleCombo},
      {"eqratio6[X,A,C,E,F,G,H]", "div(div(len(A,X),len(C,X)),div(len(E,F),len(G,H)))", 1,
       K::kRatio},
  };
  return table;
}

TEST(CompilePredicate, MatchesMappingTable) {
  std::set<std::string> covered;
  for (const Expected& row : MappingTable()) {
    const SubGoal g = CompilePredicate(ParsePredicate(row.term));
    EXPECT_EQ(g.expr.Serialize(), row.expr) << row.term;
    EXPECT_EQ(g.expected, row.value) << row.term;
    EXPECT_EQ(g.kind, row.kind) << row.term;
    EXPECT_EQ(g.expr.kind(), g.kind) << row.term;
    EXPECT_LE(g.expr.depth(), QuantityExpr::kMaxDepth);
    covered.insert(row.term.substr(0, row.term.find('[')));
  }
  // Catalog closure: the table and the parser's catalog agree exactly.
  std::set<std::string> catalog;
  for (const auto& e : Catalog()) catalog.insert(std::string(e.name));
  EXPECT_EQ(covered, catalog);
}

TEST(CompilePredicate, Examples) {
  const SubGoal cong = CompilePredicate(ParsePredicate("cong[A,B,C,D]"));
  EXPECT_EQ(cong.expr.Display(), "|AB|/|CD|");
  EXPECT_EQ(cong.expected, 1.0);
  EXPECT_EQ(cong.kind, QuantityKind::kRatio);
  const SubGoal midp = CompilePredicate(ParsePredicate("midp[M,A,B]"));
  EXPECT_EQ(midp.expr.Display(), "|AM|/|MB|");
  const SubGoal t12 = CompilePredicate(ParsePredicate("triangle12[A,B,C]"));
  EXPECT_EQ(t12.expr.Display(), "|AB|/|AC|");
  EXPECT_EQ(t12.expected, 0.5);
}

TEST(CompileSkeleton, OrderAndIds) {
  const Skeleton sk = ParseSkeleton("midp[M,A,B]\neqangle[A,B,C,D,E,F,G,H]\nperp[A,B,C,D]");
  const auto goals = CompileSkeleton(sk);
  ASSERT_EQ(goals.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(goals[i].id, i);
    EXPECT_EQ(goals[i].source_step, i);
    EXPECT_EQ(goals[i].Label(), "T" + std::to_string(i));
    EXPECT_FALSE(goals[i].masked);
  }
  EXPECT_EQ(goals[1].kind, QuantityKind::kAngleCombo);
  EXPECT_EQ(goals[1].expected, 0.0);
  EXPECT_EQ(goals[2].expected, 90.0);
  EXPECT_EQ(goals[2].expr.Serialize(), "angle(A,B,C,D)");
  EXPECT_THROW(CompileSkeleton(Skeleton{}), Error);
  EXPECT_EQ(SerializeSubGoals(CompileSkeleton(sk)), SerializeSubGoals(goals));
}

TEST(SubGoalText, RoundTrip) {
  std::string text;
  for (const Expected& row : MappingTable()) text += row.term + "\n";
  const auto goals = CompileSkeleton(ParseSkeleton(text));
  const std::string serialized = SerializeSubGoals(goals);
  EXPECT_EQ(ParseSubGoals(serialized), goals);
  EXPECT_THROW(ParseSubGoals("T0 angle 1 div(len(A,B),len(C,D))"), ParseError);
  EXPECT_THROW(ParseSubGoals("X0 ratio 1 div(len(A,B),len(C,D))"), ParseError);
  EXPECT_THROW(ParseSubGoals("T0 ratio one div(len(A,B),len(C,D))"), ParseError);
}

TEST(EvaluateSubGoal, Examples) {
  const std::vector<PointDecl> sq = {{"A", {0, 0}}, {"B", {1, 0}}, {"C", {1, 1}}};
  const SubGoal rect = CompilePredicate(ParsePredicate("rectangle[A,B,C,A]"));
  EXPECT_NEAR(EvaluateSubGoal(rect, PointMap(sq)), 90.0, 1e-12);

  const std::vector<PointDecl> eq = {{"A", {0, 0}}, {"B", {1, 0}}, {"C", {0.5, std::sqrt(3.0) / 2}}};
  const SubGoal ieq = CompilePredicate(ParsePredicate("ieq_triangle[A,B,C]"));
  EXPECT_LE(AngleDistance(EvaluateSubGoal(ieq, PointMap(eq)), 60.0), 1e-9);

  const std::vector<PointDecl> degenerate = {
      {"A", {0, 0}}, {"B", {1, 0}}, {"C", {2, 2}}, {"D", {2, 2}}};
  const SubGoal cong = CompilePredicate(ParsePredicate("cong[A,B,C,D]"));
  EXPECT_THROW(EvaluateSubGoal(cong, PointMap(degenerate)), EvalError);

  EXPECT_THROW(EvaluateSubGoal(cong, PointMap(sq)), EvalError);  // D missing
}

TEST(CheckSatisfaction, Examples) {
  const std::vector<PointDecl> pts = {{"A", {0, 0}}, {"B", {2, 4}}, {"M", {1, 2}}};
  const SubGoal midp = CompilePredicate(ParsePredicate("midp[M,A,B]"));
  EXPECT_TRUE(CheckSatisfaction(midp, PointMap(pts), 1e-12));

  EXPECT_TRUE(WithinTolerance(1.015, 1.0, QuantityKind::kRatio, 0.02));
  EXPECT_FALSE(WithinTolerance(1.03, 1.0, QuantityKind::kRatio, 0.02));
  EXPECT_TRUE(WithinTolerance(179.99, 0.0, QuantityKind::kAngle, 0.02));
  EXPECT_TRUE(WithinTolerance(0.0, 180.0, QuantityKind::kAngleCombo, 1e-12));
  EXPECT_FALSE(WithinTolerance(179.99, 0.0, QuantityKind::kRatio, 0.02));
  // Decimal boundaries are inclusive although 1.02 - 1 exceeds 0.02 in
  // binary floating point.
  EXPECT_GT(1.02 - 1.0, 0.02);
  EXPECT_TRUE(WithinTolerance(1.02, 1.0, QuantityKind::kRatio, 0.02));
  EXPECT_TRUE(WithinTolerance(90.02, 90.0, QuantityKind::kAngle, 0.02));
  EXPECT_FALSE(WithinTolerance(1.0200001, 1.0, QuantityKind::kRatio, 0.02));
}

std::vector<PointDecl> OnUnitCircle(const std::vector<double>& radians) {
  std::vector<PointDecl> pts;
  const char* names[] = {"A", "B", "C", "D"};
  for (size_t i = 0; i < radians.size(); ++i) {
    pts.push_back({names[i], {std::cos(radians[i]), std::sin(radians[i])}});
  }
  return pts;
}

// With directed angles both terms of the cyclic form are congruent (inscribed
// angles on the same chord), so their sum is 0 mod 180 exactly when AC is a
// diameter and each term is 90.
TEST(EvaluateSubGoal, CyclicFormHoldsForDiameterChord) {
  const SubGoal g = CompilePredicate(ParsePredicate("cyclic[A,B,C,D]"));
  auto pts = OnUnitCircle({0.3, 1.9, 0.3 + M_PI, 5.0});
  EXPECT_TRUE(CheckSatisfaction(g, PointMap(pts), 1e-9));
  pts[3].at = {1.3 * pts[3].at.x, 1.3 * pts[3].at.y};
  EXPECT_FALSE(CheckSatisfaction(g, PointMap(pts), 0.02));
}

TEST(EvaluateSubGoal, CyclicFormFailsForGenericConcyclicPoints) {
  const SubGoal g = CompilePredicate(ParsePredicate("cyclic[A,B,C,D]"));
  const auto pts = OnUnitCircle({0.3, 1.9, 3.5, 5.0});
  const PointMap map(pts);
  const double b = DirectedAngle(map.at("A"), map.at("B"), map.at("C"), map.at("B")).value;
  const double d = DirectedAngle(map.at("A"), map.at("D"), map.at("C"), map.at("D")).value;
  EXPECT_LE(AngleDistance(b, d), 1e-9);
  EXPECT_FALSE(CheckSatisfaction(g, map, 0.02));
}

// The mirror X of A across BC gives angle(B,A,B,C) - angle(C,B,C,X)
// = dir(BA) - dir(CA), which vanishes only for A on line BC.
TEST(EvaluateSubGoal, ReflectFormHoldsOnlyForDegenerateMirror) {
  const SubGoal g = CompilePredicate(ParsePredicate("reflect[X,A,B,C]"));
  const std::vector<PointDecl> generic = {
      {"A", {0.3, 1.0}}, {"B", {0, 0}}, {"C", {2, 0}}, {"X", {0.3, -1.0}}};
  EXPECT_FALSE(CheckSatisfaction(g, PointMap(generic), 0.02));
  const std::vector<PointDecl> on_line = {
      {"A", {0.7, 0}}, {"B", {0, 0}}, {"C", {2, 0}}, {"X", {0.7, 0}}};
  EXPECT_TRUE(CheckSatisfaction(g, PointMap(on_line), 1e-9));
}

TEST(EvaluateSubGoal, AreaIsScaleNormalized) {
  const SubGoal coll = CompilePredicate(ParsePredicate("coll[A,B,C]"));
  std::vector<PointDecl> pts = {{"A", {0, 0}}, {"B", {1, 0}}, {"C", {0.5, 0.01}}};
  const double small = EvaluateSubGoal(coll, PointMap(pts));
  for (auto& p : pts) p.at = {p.at.x * 1000, p.at.y * 1000};
  EXPECT_NEAR(EvaluateSubGoal(coll, PointMap(pts)), small, 1e-12);
  EXPECT_NEAR(small, 0.005, 1e-12);
}

TEST(EvaluateSubGoal, LengthIsInCanvasUnits) {
  const SubGoal l = CompilePredicate(ParsePredicate("lconst[A,X,5]"));
  const std::vector<PointDecl> pts = {{"A", {0, 0}}, {"X", {3, 4}}};
  EXPECT_EQ(EvaluateSubGoal(l, PointMap(pts)), 5.0);
}

}  // namespace
}  // namespace goalcheck
