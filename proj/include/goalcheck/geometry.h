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

// Plane geometry kernel. All arithmetic is double precision and no function
// here compares against a tolerance; callers own every epsilon.
//
// Angles are in degrees. A line direction is the angle of an undirected line,
// so it lives in [0, 180). The directed angle between two lines is the
// difference of their directions, reduced into [0, 180).

#ifndef GOALCHECK_GEOMETRY_H_
#define GOALCHECK_GEOMETRY_H_

#include <string_view>

namespace goalcheck {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class QuantityKind {
  kLength,      // canvas units, >= 0
  kRatio,       // dimensionless
  kAngle,       // degrees in [0, 180)
  kAngleCombo,  // sum or difference of angles, compared modulo 180
  kArea,        // canvas units squared, signed
};

std::string_view KindName(QuantityKind kind);
// Inverse of KindName. Throws ParseError on an unknown name.
QuantityKind KindFromName(std::string_view name);

// True for kinds that are compared on the mod-180 circle.
constexpr bool IsAngular(QuantityKind kind) {
  return kind == QuantityKind::kAngle || kind == QuantityKind::kAngleCombo;
}

struct Quantity {
  double value = 0.0;
  QuantityKind kind = QuantityKind::kRatio;
};

// Reduces any finite angle into [0, 180).
double ReduceMod180(double degrees);

Quantity SegmentLength(Point a, Point b);

// Direction of the undirected line AB. Throws EvalError when A == B.
Quantity LineDirection(Point a, Point b);

// (direction(AB) - direction(CD)) reduced into [0, 180).
// Throws EvalError when either segment is degenerate.
Quantity DirectedAngle(Point a, Point b, Point c, Point d);

// Half the cross product (B - A) x (C - A); positive for counter-clockwise.
Quantity SignedArea(Point a, Point b, Point c);

// Distance between two angles on the mod-180 circle, in [0, 90].
double AngleDistance(double a, double b);

}  // namespace goalcheck

#endif  // GOALCHECK_GEOMETRY_H_
