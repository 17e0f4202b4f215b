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

#include "goalcheck/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace goalcheck {
namespace {

struct Circle {
  Point center;
  double radius;
};

std::string F(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  std::string s = buf;
  return s == "-0.0000" ? "0.0000" : s;
}

std::string Escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

void CollectSegments(const QuantityExpr& e, std::vector<std::pair<std::string, std::string>>& out) {
  const auto& p = e.points();
  switch (e.op()) {
    case QuantityExpr::Op::kSegLength:
      out.emplace_back(p[0], p[1]);
      break;
    case QuantityExpr::Op::kDirAngle:
      out.emplace_back(p[0], p[1]);
      out.emplace_back(p[2], p[3]);
      break;
    case QuantityExpr::Op::kSignedArea:
      out.emplace_back(p[0], p[1]);
      out.emplace_back(p[1], p[2]);
      out.emplace_back(p[2], p[0]);
      break;
    case QuantityExpr::Op::kConst:
      break;
    case QuantityExpr::Op::kDiv:
    case QuantityExpr::Op::kSub:
    case QuantityExpr::Op::kAdd:
      CollectSegments(e.lhs(), out);
      CollectSegments(e.rhs(), out);
      break;
  }
}

std::optional<Circle> Circumcircle(Point a, Point b, Point c) {
  const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  if (std::abs(d) < 1e-12) return std::nullopt;
  const double a2 = a.x * a.x + a.y * a.y;
  const double b2 = b.x * b.x + b.y * b.y;
  const double c2 = c.x * c.x + c.y * c.y;
  const Point o{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
  return Circle{o, std::hypot(a.x - o.x, a.y - o.y)};
}

std::optional<Circle> StepCircle(const PredicateStep& step, const PointMap& map) {
  const auto p = step.PointArgs();
  const auto dist = [](Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); };
  if (step.predicate == "on_circle") {  // X, O, A
    return Circle{map.at(p[1]), dist(map.at(p[1]), map.at(p[2]))};
  }
  if (step.predicate == "lc_tangent") {  // X, A, O
    return Circle{map.at(p[2]), dist(map.at(p[2]), map.at(p[1]))};
  }
  if (step.predicate == "on_dia") {  // X, A, B
    const Point a = map.at(p[1]);
    const Point b = map.at(p[2]);
    return Circle{{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}, 0.5 * dist(a, b)};
  }
  if (step.predicate == "cyclic") {
    return Circumcircle(map.at(p[0]), map.at(p[1]), map.at(p[2]));
  }
  return std::nullopt;
}

}  // namespace

std::string RenderSvg(const InstanceFile& instance) {
  const PointMap map(instance.points);

  std::vector<std::pair<std::string, std::string>> raw;
  for (const auto& goal : instance.subgoals) CollectSegments(goal.expr, raw);
  std::vector<std::pair<Point, Point>> segments;
  std::set<std::pair<std::string, std::string>> seen;
  for (auto [a, b] : raw) {
    if (b < a) std::swap(a, b);
    if (a == b || !seen.insert({a, b}).second) continue;
    const Point pa = map.at(a);
    const Point pb = map.at(b);
    if (pa == pb) continue;
    segments.emplace_back(pa, pb);
  }

  std::vector<Circle> circles;
  for (const auto& step : instance.skeleton.steps) {
    if (auto c = StepCircle(step, map)) circles.push_back(*c);
  }

  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  const auto grow = [&](double x0, double y0, double x1, double y1) {
    min_x = std::min(min_x, x0);
    min_y = std::min(min_y, y0);
    max_x = std::max(max_x, x1);
    max_y = std::max(max_y, y1);
  };
  for (const auto& p : instance.points) grow(p.at.x, p.at.y, p.at.x, p.at.y);
  for (const auto& c : circles) {
    grow(c.center.x - c.radius, c.center.y - c.radius, c.center.x + c.radius,
         c.center.y + c.radius);
  }
  if (instance.points.empty()) {
    min_x = min_y = 0.0;
    max_x = max_y = 1.0;
  }
  const double size = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double pad = 0.08 * size + 0.3;
  const double stroke = 0.004 * size;
  const double dot = 0.01 * size;
  const double font = 0.035 * size;

  // SVG y grows downward, so every y is negated.
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + F(min_x - pad) + " " +
         F(-max_y - pad) + " " + F(max_x - min_x + 2 * pad) + " " +
         F(max_y - min_y + 2 * pad) + "\">\n";
  out += "<title>" + Escape(instance.id) + "</title>\n";
  out += "<g fill=\"none\" stroke=\"#888888\" stroke-width=\"" + F(stroke) + "\">\n";
  for (const auto& c : circles) {
    out += "<circle class=\"locus\" cx=\"" + F(c.center.x) + "\" cy=\"" + F(-c.center.y) + "\" r=\"" +
           F(c.radius) + "\"/>\n";
  }
  out += "</g>\n";
  out += "<g stroke=\"#000000\" stroke-width=\"" + F(stroke) + "\">\n";
  for (const auto& [a, b] : segments) {
    out += "<line x1=\"" + F(a.x) + "\" y1=\"" + F(-a.y) + "\" x2=\"" + F(b.x) + "\" y2=\"" +
           F(-b.y) + "\"/>\n";
  }
  out += "</g>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"" + F(font) + "\">\n";
  for (const auto& p : instance.points) {
    out += "<circle class=\"point\" cx=\"" + F(p.at.x) + "\" cy=\"" + F(-p.at.y) + "\" r=\"" + F(dot) +
           "\"/>\n";
    out += "<text x=\"" + F(p.at.x + 1.5 * dot) + "\" y=\"" + F(-p.at.y - 1.5 * dot) + "\">" +
           Escape(p.name) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace goalcheck
