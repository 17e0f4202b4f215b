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

#include "goalcheck/catalog.h"

#include <array>

namespace goalcheck {
namespace {

using Pts = std::vector<std::string>;
using Nums = std::vector<double>;
using E = QuantityExpr;

E Len(const std::string& a, const std::string& b) { return E::SegLength(a, b); }

E Ang(const std::string& a, const std::string& b, const std::string& c,
      const std::string& d) {
  return E::DirAngle(a, b, c, d);
}

// Equality predicates use ratio forms with expected value 1; the difference
// forms are never substituted.
constexpr std::array kEntries = {
    // Core predicates.
    CatalogEntry{"cong", "A,B,C,D", 4, 0, CatalogGroup::kCore,
                 "segment equality",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Div(Len(p[0], p[1]), Len(p[2], p[3])), 1.0};
                 }},
    CatalogEntry{"eqratio", "A,B,C,D,E,F,G,H", 8, 0, CatalogGroup::kCore,
                 "ratio equality AB:CD = EF:GH",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{
                       E::Div(E::Div(Len(p[0], p[1]), Len(p[2], p[3])),
                              E::Div(Len(p[4], p[5]), Len(p[6], p[7]))),
                       1.0};
                 }},
    CatalogEntry{"eqangle", "P0,P1,P2,P3,P4,P5,P6,P7", 8, 0, CatalogGroup::kCore,
                 "angle equality (mod 180)",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Sub(Ang(p[0], p[1], p[2], p[3]),
                                               Ang(p[4], p[5], p[6], p[7])),
                                        0.0};
                 }},
    CatalogEntry{"para", "A,B,C,D", 4, 0, CatalogGroup::kCore, "AB parallel to CD",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[0], p[1], p[2], p[3]), 0.0};
                 }},
    CatalogEntry{"perp", "A,B,C,D", 4, 0, CatalogGroup::kCore,
                 "AB perpendicular to CD",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[0], p[1], p[2], p[3]), 90.0};
                 }},
    CatalogEntry{"cyclic", "A,B,C,D", 4, 0, CatalogGroup::kCore,
                 "opposite angles sum to 180",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Add(Ang(p[0], p[1], p[2], p[1]),
                                               Ang(p[0], p[3], p[2], p[3])),
                                        180.0};
                 }},
    CatalogEntry{"on_circle", "X,O,A", 3, 0, CatalogGroup::kCore,
                 "X on the circle centred at O through A",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Div(Len(p[1], p[0]), Len(p[1], p[2])), 1.0};
                 }},
    CatalogEntry{"lc_tangent", "X,A,O", 3, 0, CatalogGroup::kCore,
                 "tangent AX perpendicular to radius AO",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[1], p[0], p[1], p[2]), 90.0};
                 }},
    CatalogEntry{"simtrir", "A,B,C,D,E,F", 6, 0, CatalogGroup::kCore,
                 "similar triangles",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Sub(Ang(p[0], p[1], p[1], p[2]),
                                               Ang(p[3], p[4], p[4], p[5])),
                                        0.0};
                 }},
    CatalogEntry{"coll", "A,B,C", 3, 0, CatalogGroup::kCore, "zero area",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::SignedArea(p[0], p[1], p[2]), 0.0};
                 }},
    CatalogEntry{"on_line", "X,A,B", 3, 0, CatalogGroup::kCore, "X on line AB",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[1], p[0], p[0], p[2]), 0.0};
                 }},

    // Constant-valued constraints.
    CatalogEntry{"rconst", "A,B,C,X", 4, 1, CatalogGroup::kConstant,
                 "constant ratio |AB|/|CX| = r",
                 [](const Pts& p, const Nums& n) {
                   return LoweredTarget{E::Div(Len(p[0], p[1]), Len(p[2], p[3])), n[0]};
                 }},
    CatalogEntry{"rconst2", "X,A,B", 3, 1, CatalogGroup::kConstant,
                 "constant ratio |AX|/|BX| = r",
                 [](const Pts& p, const Nums& n) {
                   return LoweredTarget{E::Div(Len(p[1], p[0]), Len(p[2], p[0])), n[0]};
                 }},
    CatalogEntry{"aconst", "A,B,C,X", 4, 1, CatalogGroup::kConstant,
                 "fixed angle between AB and CX",
                 [](const Pts& p, const Nums& n) {
                   return LoweredTarget{Ang(p[0], p[1], p[2], p[3]), n[0]};
                 }},
    CatalogEntry{"s_angle", "A,B,X", 3, 1, CatalogGroup::kConstant,
                 "angle at vertex B",
                 [](const Pts& p, const Nums& n) {
                   return LoweredTarget{Ang(p[0], p[1], p[1], p[2]), n[0]};
                 }},
    CatalogEntry{"lconst", "A,X", 2, 1, CatalogGroup::kConstant,
                 "fixed length |AX| = l",
                 [](const Pts& p, const Nums& n) {
                   return LoweredTarget{Len(p[0], p[1]), n[0]};
                 }},
    CatalogEntry{"midp", "M,A,B", 3, 0, CatalogGroup::kConstant,
                 "M is the midpoint of AB",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Div(Len(p[1], p[0]), Len(p[0], p[2])), 1.0};
                 }},

    // Special triangles.
    CatalogEntry{"ieq_triangle", "A,B,C", 3, 0, CatalogGroup::kTriangle,
                 "equilateral triangle",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[0], p[1], p[1], p[2]), 60.0};
                 }},
    CatalogEntry{"iso_triangle", "A,B,C", 3, 0, CatalogGroup::kTriangle,
                 "isosceles with |AB| = |AC|",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Div(Len(p[0], p[1]), Len(p[0], p[2])), 1.0};
                 }},
    CatalogEntry{"r_triangle", "A,B,C", 3, 0, CatalogGroup::kTriangle,
                 "right angle at A",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[0], p[1], p[0], p[2]), 90.0};
                 }},
    CatalogEntry{"triangle12", "A,B,C", 3, 0, CatalogGroup::kTriangle,
                 "|AB|:|AC| = 1:2",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Div(Len(p[0], p[1]), Len(p[0], p[2])), 0.5};
                 }},
    CatalogEntry{"risos", "A,B,C", 3, 0, CatalogGroup::kTriangle,
                 "isosceles right triangle at A",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[0], p[1], p[0], p[2]), 90.0};
                 }},
    CatalogEntry{"nsquare", "X,A,B", 3, 0, CatalogGroup::kTriangle,
                 "right angle AXB",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[0], p[1], p[0], p[2]), 90.0};
                 }},

    // Quadrilaterals.
    CatalogEntry{"rectangle", "A,B,C,D", 4, 0, CatalogGroup::kQuadrilateral,
                 "right angle ABC",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[0], p[1], p[1], p[2]), 90.0};
                 }},
    CatalogEntry{"square", "A,B,X,Y", 4, 0, CatalogGroup::kQuadrilateral,
                 "square on side AB",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[0], p[1], p[0], p[2]), 90.0};
                 }},
    CatalogEntry{"trapezoid", "A,B,C,D", 4, 0, CatalogGroup::kQuadrilateral,
                 "AB parallel to CD",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[0], p[1], p[2], p[3]), 0.0};
                 }},
    CatalogEntry{"r_trapezoid", "A,B,C,D", 4, 0, CatalogGroup::kQuadrilateral,
                 "right angle BAD",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[0], p[1], p[0], p[3]), 90.0};
                 }},
    CatalogEntry{"eq_quadrangle", "A,B,C,D", 4, 0, CatalogGroup::kQuadrilateral,
                 "|AD| = |BC|",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Div(Len(p[0], p[3]), Len(p[1], p[2])), 1.0};
                 }},
    CatalogEntry{"eqdia_quadrangle", "A,B,C,D", 4, 0,
                 CatalogGroup::kQuadrilateral, "equal diagonals |AC| = |BD|",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Div(Len(p[0], p[2]), Len(p[1], p[3])), 1.0};
                 }},
    CatalogEntry{"psquare", "X,A,B", 3, 0, CatalogGroup::kQuadrilateral,
                 "X is B rotated 90 degrees about A",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[1], p[2], p[1], p[0]), 90.0};
                 }},

    // Auxiliary point constructions.
    CatalogEntry{"on_pline", "X,A,B,C", 4, 0, CatalogGroup::kConstruction,
                 "X on the parallel to BC through A",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[1], p[0], p[2], p[3]), 0.0};
                 }},
    CatalogEntry{"on_tline", "X,A,B,C", 4, 0, CatalogGroup::kConstruction,
                 "X on the perpendicular to BC through A",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[1], p[0], p[2], p[3]), 90.0};
                 }},
    CatalogEntry{"on_bline", "X,A,B", 3, 0, CatalogGroup::kConstruction,
                 "X on the perpendicular bisector of AB",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Div(Len(p[0], p[1]), Len(p[0], p[2])), 1.0};
                 }},
    CatalogEntry{"on_dia", "X,A,B", 3, 0, CatalogGroup::kConstruction,
                 "X on the circle with diameter AB",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{Ang(p[1], p[0], p[2], p[0]), 90.0};
                 }},
    CatalogEntry{"on_aline", "X,A,B,C,D,E", 6, 0, CatalogGroup::kConstruction,
                 "angle transfer",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Sub(Ang(p[2], p[1], p[1], p[0]),
                                               Ang(p[5], p[4], p[4], p[3])),
                                        0.0};
                 }},
    CatalogEntry{"reflect", "X,A,B,C", 4, 0, CatalogGroup::kConstruction,
                 "reflection of A across line BC",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Sub(Ang(p[2], p[1], p[2], p[3]),
                                               Ang(p[3], p[2], p[3], p[0])),
                                        0.0};
                 }},
    CatalogEntry{"eqangle2", "X,A,B,C", 4, 0, CatalogGroup::kConstruction,
                 "angle BXA equals angle CXA",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Sub(Ang(p[1], p[0], p[0], p[2]),
                                               Ang(p[3], p[0], p[0], p[1])),
                                        0.0};
                 }},
    CatalogEntry{"eqangle3", "X,A,B,D,E,F", 6, 0, CatalogGroup::kConstruction,
                 "angle AXB equals angle DEF",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{E::Sub(Ang(p[1], p[0], p[0], p[2]),
                                               Ang(p[3], p[4], p[4], p[5])),
                                        0.0};
                 }},
    CatalogEntry{"eqratio6", "X,A,C,E,F,G,H", 7, 0, CatalogGroup::kConstruction,
                 "|AX|:|CX| = |EF|:|GH|",
                 [](const Pts& p, const Nums&) {
                   return LoweredTarget{
                       E::Div(E::Div(Len(p[1], p[0]), Len(p[2], p[0])),
                              E::Div(Len(p[3], p[4]), Len(p[5], p[6]))),
                       1.0};
                 }},
};

}  // namespace

std::span<const CatalogEntry> Catalog() { return kEntries; }

const CatalogEntry* FindPredicate(std::string_view name) {
  for (const auto& entry : kEntries) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

}  // namespace goalcheck
