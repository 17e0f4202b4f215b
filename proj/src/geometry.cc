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

#include "goalcheck/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "goalcheck/error.h"

namespace goalcheck {

std::string_view KindName(QuantityKind kind) {
  switch (kind) {
    case QuantityKind::kLength:
      return "length";
    case QuantityKind::kRatio:
      return "ratio";
    case QuantityKind::kAngle:
      return "angle";
    case QuantityKind::kAngleCombo:
      return "angle_combo";
    case QuantityKind::kArea:
      return "area";
  }
  return "unknown";
}

QuantityKind KindFromName(std::string_view name) {
  for (auto kind : {QuantityKind::kLength, QuantityKind::kRatio,
                    QuantityKind::kAngle, QuantityKind::kAngleCombo,
                    QuantityKind::kArea}) {
    if (KindName(kind) == name) return kind;
  }
  throw ParseError("unknown quantity kind '" + std::string(name) + "'");
}

double ReduceMod180(double degrees) {
  double r = std::fmod(degrees, 180.0);
  if (r < 0.0) r += 180.0;
  // -1e-17 + 180 rounds to exactly 180.
  if (r >= 180.0) r = 0.0;
  return r;
}

Quantity SegmentLength(Point a, Point b) {
  return {std::hypot(b.x - a.x, b.y - a.y), QuantityKind::kLength};
}

Quantity LineDirection(Point a, Point b) {
  if (a == b) throw EvalError("degenerate segment: endpoints coincide");
  const double rad = std::atan2(b.y - a.y, b.x - a.x);
  return {ReduceMod180(rad * 180.0 / std::numbers::pi), QuantityKind::kAngle};
}

Quantity DirectedAngle(Point a, Point b, Point c, Point d) {
  const double first = LineDirection(a, b).value;
  const double second = LineDirection(c, d).value;
  return {ReduceMod180(first - second), QuantityKind::kAngle};
}

Quantity SignedArea(Point a, Point b, Point c) {
  const double cross =
      (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  return {cross / 2.0, QuantityKind::kArea};
}

double AngleDistance(double a, double b) {
  // fmod of |a - b| is exact, which keeps the result symmetric in a and b.
  const double d = std::fmod(std::abs(a - b), 180.0);
  return std::min(d, 180.0 - d);
}

}  // namespace goalcheck
