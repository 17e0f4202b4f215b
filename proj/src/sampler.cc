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

#include "goalcheck/sampler.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "goalcheck/error.h"
#include "goalcheck/subgoal.h"

namespace goalcheck {
namespace {

constexpr double kCanvas = 5.0;
constexpr double kMaxCoordinate = 25.0;
constexpr double kFreeSeparation = 0.8;
constexpr double kSampleTol = 1e-6;
constexpr int kMaxAttempts = 500;

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

double Deg2Rad(double d) { return d * std::numbers::pi / 180.0; }

Point Unit(double degrees) {
  return {std::cos(Deg2Rad(degrees)), std::sin(Deg2Rad(degrees))};
}

// Counter-clockwise rotation about the origin.
Point Rotate(Point v, double degrees) {
  const double c = std::cos(Deg2Rad(degrees));
  const double s = std::sin(Deg2Rad(degrees));
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Point Rot90(Point v) { return {-v.y, v.x}; }

// Direction of the vector a -> b in degrees; not reduced.
double Dir(Point a, Point b) {
  return std::atan2(b.y - a.y, b.x - a.x) * 180.0 / std::numbers::pi;
}

double Dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::vector<std::string> SplitParams(std::string_view params) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= params.size()) {
    const size_t comma = params.find(',', start);
    const size_t end = comma == std::string_view::npos ? params.size() : comma;
    out.emplace_back(params.substr(start, end - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string ChainName(int index) {
  std::string name(1, static_cast<char>('A' + index % 26));
  if (index >= 26) name += std::to_string(index / 26);
  return name;
}

// Places points for one step. In chain mode free arguments may reuse points
// from earlier steps and new points get the next chain name; otherwise every
// point is new and named after the entry's parameter.
class Builder {
 public:
  Builder(std::mt19937_64& rng, std::vector<PointDecl>& points,
          const CatalogEntry& entry, bool chain, double reuse_probability,
          int& next_name)
      : rng_(rng),
        points_(points),
        params_(SplitParams(entry.point_params)),
        chain_(chain),
        reuse_probability_(reuse_probability),
        next_name_(next_name) {}

  double Uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }
  double Length() { return Uniform(1.5, 4.0); }
  double Heading() { return Uniform(0.0, 360.0); }
  // Rounded constants keep the prompts readable.
  double Round2(double v) { return std::round(v * 100.0) / 100.0; }

  std::string Free(int slot) {
    if (chain_ && Uniform(0.0, 1.0) < reuse_probability_) {
      std::vector<size_t> candidates;
      for (size_t i = 0; i < points_.size(); ++i) {
        if (!used_.contains(points_[i].name)) candidates.push_back(i);
      }
      if (!candidates.empty()) {
        const auto& pick = points_[candidates[rng_() % candidates.size()]];
        used_.emplace(pick.name, pick.at);
        return pick.name;
      }
    }
    for (int attempt = 0; attempt < 100; ++attempt) {
      const Point p{Uniform(-kCanvas, kCanvas), Uniform(-kCanvas, kCanvas)};
      const bool clear = std::all_of(points_.begin(), points_.end(), [&](const PointDecl& d) {
        return Dist(d.at, p) >= kFreeSeparation;
      });
      if (clear) return Add(slot, p);
    }
    ok_ = false;
    return Add(slot, Point{Uniform(-kCanvas, kCanvas), Uniform(-kCanvas, kCanvas)});
  }

  std::string Make(int slot, Point p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || std::abs(p.x) > kMaxCoordinate ||
        std::abs(p.y) > kMaxCoordinate) {
      ok_ = false;
    }
    for (const auto& d : points_) {
      if (Dist(d.at, p) < kMinSeparation) ok_ = false;
    }
    return Add(slot, p);
  }

  // A second name for an existing point.
  std::string Alias(int slot, const std::string& of) { return Add(slot, at(of)); }

  Point at(const std::string& name) const { return used_.at(name); }
  bool ok() const { return ok_; }

 private:
  std::string Add(int slot, Point p) {
    const std::string name = chain_ ? ChainName(next_name_++) : params_.at(slot);
    points_.push_back({name, p});
    used_.emplace(name, p);
    return name;
  }

  std::mt19937_64& rng_;
  std::vector<PointDecl>& points_;
  std::vector<std::string> params_;
  bool chain_;
  double reuse_probability_;
  int& next_name_;
  std::map<std::string, Point> used_;
  bool ok_ = true;
};

struct Draft {
  std::vector<std::string> points;
  std::vector<double> numbers;
};

using Recipe = std::function<Draft(Builder&)>;

// Point on the circle with diameter AB, away from A and B.
Point OnDiameterCircle(Builder& b, Point a, Point bb) {
  const Point mid = 0.5 * (a + bb);
  const double base = Dir(a, bb);
  const double offset = b.Uniform(30.0, 150.0);
  const double side = b.Uniform(0.0, 1.0) < 0.5 ? 1.0 : -1.0;
  return mid + (0.5 * Dist(a, bb)) * Unit(base + side * offset);
}

// Interpolation parameter on a line, kept away from both anchors.
double LineParameter(Builder& b) {
  const double t = b.Uniform(0.3, 0.7);
  const double pick = b.Uniform(0.0, 1.0);
  if (pick < 0.4) return t;
  if (pick < 0.7) return 1.0 + t;
  return -t;
}

const std::map<std::string_view, Recipe>& Recipes() {
  static const auto* recipes = new std::map<std::string_view, Recipe>{
      {"cong",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1), C = b.Free(2);
         auto D = b.Make(3, b.at(C) + Dist(b.at(A), b.at(B)) * Unit(b.Heading()));
         return Draft{{A, B, C, D}, {}};
       }},
      {"eqratio",
       [](Builder& b) {
         std::vector<std::string> p;
         for (int i = 0; i < 7; ++i) p.push_back(b.Free(i));
         const double gh = Dist(b.at(p[4]), b.at(p[5])) * Dist(b.at(p[2]), b.at(p[3])) /
                           Dist(b.at(p[0]), b.at(p[1]));
         p.push_back(b.Make(7, b.at(p[6]) + gh * Unit(b.Heading())));
         return Draft{p, {}};
       }},
      {"eqangle",
       [](Builder& b) {
         std::vector<std::string> p;
         for (int i = 0; i < 7; ++i) p.push_back(b.Free(i));
         const double alpha = Dir(b.at(p[0]), b.at(p[1])) - Dir(b.at(p[2]), b.at(p[3]));
         const double d = Dir(b.at(p[4]), b.at(p[5])) - alpha;
         p.push_back(b.Make(7, b.at(p[6]) + b.Length() * Unit(d)));
         return Draft{p, {}};
       }},
      {"para",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1), C = b.Free(2);
         auto D = b.Make(3, b.at(C) + b.Length() * Unit(Dir(b.at(A), b.at(B))));
         return Draft{{A, B, C, D}, {}};
       }},
      {"perp",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1), C = b.Free(2);
         auto D = b.Make(3, b.at(C) + b.Length() * Unit(Dir(b.at(A), b.at(B)) + 90.0));
         return Draft{{A, B, C, D}, {}};
       }},
      {"cyclic",
       // A and C diametrically opposite: the directed form only holds there.
       [](Builder& b) {
         auto A = b.Free(0);
         const double r = b.Uniform(1.0, 3.0);
         const double phi = b.Heading();
         const Point o = b.at(A) + r * Unit(phi);
         auto C = b.Make(2, b.at(A) + (2.0 * r) * Unit(phi));
         auto B = b.Make(1, o + r * Unit(phi + b.Uniform(200.0, 340.0)));
         auto D = b.Make(3, o + r * Unit(phi + b.Uniform(20.0, 160.0)));
         return Draft{{A, B, C, D}, {}};
       }},
      {"on_circle",
       [](Builder& b) {
         auto O = b.Free(1), A = b.Free(2);
         auto X = b.Make(0, b.at(O) + Dist(b.at(O), b.at(A)) * Unit(b.Heading()));
         return Draft{{X, O, A}, {}};
       }},
      {"lc_tangent",
       [](Builder& b) {
         auto A = b.Free(1), O = b.Free(2);
         auto X = b.Make(0, b.at(A) + b.Length() * Unit(Dir(b.at(A), b.at(O)) + 90.0));
         return Draft{{X, A, O}, {}};
       }},
      {"simtrir",
       // Orientation-preserving similarity A->D, B->E, C->F.
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1), C = b.Free(2), D = b.Free(3);
         const double s = b.Uniform(0.5, 1.5);
         const double phi = b.Heading();
         auto E = b.Make(4, b.at(D) + s * Rotate(b.at(B) - b.at(A), phi));
         auto F = b.Make(5, b.at(D) + s * Rotate(b.at(C) - b.at(A), phi));
         return Draft{{A, B, C, D, E, F}, {}};
       }},
      {"coll",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1);
         const double t = LineParameter(b);
         auto C = b.Make(2, b.at(A) + t * (b.at(B) - b.at(A)));
         return Draft{{A, B, C}, {}};
       }},
      {"on_line",
       [](Builder& b) {
         auto A = b.Free(1), B = b.Free(2);
         const double t = LineParameter(b);
         auto X = b.Make(0, b.at(A) + t * (b.at(B) - b.at(A)));
         return Draft{{X, A, B}, {}};
       }},
      {"rconst",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1), C = b.Free(2);
         const double r = b.Round2(b.Uniform(0.4, 2.5));
         auto X = b.Make(3, b.at(C) + (Dist(b.at(A), b.at(B)) / r) * Unit(b.Heading()));
         return Draft{{A, B, C, X}, {r}};
       }},
      {"rconst2",
       [](Builder& b) {
         auto X = b.Free(0), A = b.Free(1);
         const double r = b.Round2(b.Uniform(0.4, 2.5));
         auto B = b.Make(2, b.at(X) + (Dist(b.at(A), b.at(X)) / r) * Unit(b.Heading()));
         return Draft{{X, A, B}, {r}};
       }},
      {"aconst",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1), C = b.Free(2);
         const double theta = std::round(b.Uniform(15.0, 165.0));
         auto X = b.Make(3, b.at(C) + b.Length() * Unit(Dir(b.at(A), b.at(B)) - theta));
         return Draft{{A, B, C, X}, {theta}};
       }},
      {"s_angle",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1);
         const double theta = std::round(b.Uniform(15.0, 165.0));
         auto X = b.Make(2, b.at(B) + b.Length() * Unit(Dir(b.at(A), b.at(B)) - theta));
         return Draft{{A, B, X}, {theta}};
       }},
      {"lconst",
       [](Builder& b) {
         auto A = b.Free(0);
         const double l = b.Round2(b.Uniform(1.0, 5.0));
         auto X = b.Make(1, b.at(A) + l * Unit(b.Heading()));
         return Draft{{A, X}, {l}};
       }},
      {"midp",
       [](Builder& b) {
         auto A = b.Free(1), B = b.Free(2);
         auto M = b.Make(0, 0.5 * (b.at(A) + b.at(B)));
         return Draft{{M, A, B}, {}};
       }},
      {"ieq_triangle",
       // Counter-clockwise: the directed form fixes the orientation.
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1);
         auto C = b.Make(2, b.at(A) + Rotate(b.at(B) - b.at(A), 60.0));
         return Draft{{A, B, C}, {}};
       }},
      {"iso_triangle",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1);
         const double d = Dir(b.at(A), b.at(B)) + b.Uniform(30.0, 150.0);
         auto C = b.Make(2, b.at(A) + Dist(b.at(A), b.at(B)) * Unit(d));
         return Draft{{A, B, C}, {}};
       }},
      {"r_triangle",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1);
         auto C = b.Make(2, b.at(A) + b.Length() * Unit(Dir(b.at(A), b.at(B)) + 90.0));
         return Draft{{A, B, C}, {}};
       }},
      {"triangle12",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1);
         const double d = Dir(b.at(A), b.at(B)) + b.Uniform(30.0, 150.0);
         auto C = b.Make(2, b.at(A) + (2.0 * Dist(b.at(A), b.at(B))) * Unit(d));
         return Draft{{A, B, C}, {}};
       }},
      {"risos",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1);
         auto C = b.Make(2, b.at(A) + Rot90(b.at(B) - b.at(A)));
         return Draft{{A, B, C}, {}};
       }},
      {"nsquare",
       [](Builder& b) {
         auto A = b.Free(1), B = b.Free(2);
         auto X = b.Make(0, OnDiameterCircle(b, b.at(A), b.at(B)));
         return Draft{{X, A, B}, {}};
       }},
      {"rectangle",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1);
         const Point side = b.Length() * Unit(Dir(b.at(A), b.at(B)) + 90.0);
         auto C = b.Make(2, b.at(B) + side);
         auto D = b.Make(3, b.at(A) + side);
         return Draft{{A, B, C, D}, {}};
       }},
      {"square",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1);
         const Point side = Rot90(b.at(B) - b.at(A));
         auto X = b.Make(2, b.at(A) + side);
         auto Y = b.Make(3, b.at(B) + side);
         return Draft{{A, B, X, Y}, {}};
       }},
      {"trapezoid",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1), C = b.Free(2);
         auto D = b.Make(3, b.at(C) + b.Length() * Unit(Dir(b.at(A), b.at(B))));
         return Draft{{A, B, C, D}, {}};
       }},
      {"r_trapezoid",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1);
         auto D = b.Make(3, b.at(A) + b.Length() * Unit(Dir(b.at(A), b.at(B)) + 90.0));
         auto C = b.Make(2, b.at(D) + b.Uniform(0.3, 0.8) * (b.at(B) - b.at(A)));
         return Draft{{A, B, C, D}, {}};
       }},
      {"eq_quadrangle",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1), C = b.Free(2);
         auto D = b.Make(3, b.at(A) + Dist(b.at(B), b.at(C)) * Unit(b.Heading()));
         return Draft{{A, B, C, D}, {}};
       }},
      {"eqdia_quadrangle",
       [](Builder& b) {
         auto A = b.Free(0), B = b.Free(1), C = b.Free(2);
         auto D = b.Make(3, b.at(B) + Dist(b.at(A), b.at(C)) * Unit(b.Heading()));
         return Draft{{A, B, C, D}, {}};
       }},
      {"psquare",
       [](Builder& b) {
         auto A = b.Free(1), B = b.Free(2);
         auto X = b.Make(0, b.at(A) + Rot90(b.at(B) - b.at(A)));
         return Draft{{X, A, B}, {}};
       }},
      {"on_pline",
       [](Builder& b) {
         auto A = b.Free(1), B = b.Free(2), C = b.Free(3);
         auto X = b.Make(0, b.at(A) + b.Length() * Unit(Dir(b.at(B), b.at(C))));
         return Draft{{X, A, B, C}, {}};
       }},
      {"on_tline",
       [](Builder& b) {
         auto A = b.Free(1), B = b.Free(2), C = b.Free(3);
         auto X = b.Make(0, b.at(A) + b.Length() * Unit(Dir(b.at(B), b.at(C)) + 90.0));
         return Draft{{X, A, B, C}, {}};
       }},
      {"on_bline",
       [](Builder& b) {
         auto A = b.Free(1), B = b.Free(2);
         const double magnitude = b.Uniform(0.3, 1.2);
         const double t = b.Uniform(0.0, 1.0) < 0.5 ? magnitude : -magnitude;
         auto X = b.Make(0, 0.5 * (b.at(A) + b.at(B)) + t * Rot90(b.at(B) - b.at(A)));
         return Draft{{X, A, B}, {}};
       }},
      {"on_dia",
       [](Builder& b) {
         auto A = b.Free(1), B = b.Free(2);
         auto X = b.Make(0, OnDiameterCircle(b, b.at(A), b.at(B)));
         return Draft{{X, A, B}, {}};
       }},
      {"on_aline",
       [](Builder& b) {
         auto A = b.Free(1), B = b.Free(2), C = b.Free(3), D = b.Free(4), E = b.Free(5);
         const double alpha = Dir(b.at(E), b.at(D)) - Dir(b.at(D), b.at(C));
         auto X = b.Make(0, b.at(A) + b.Length() * Unit(Dir(b.at(B), b.at(A)) - alpha));
         return Draft{{X, A, B, C, D, E}, {}};
       }},
      {"reflect",
       // The directed form only holds for A on line BC, where X = A.
       [](Builder& b) {
         auto B = b.Free(2), C = b.Free(3);
         const double t = LineParameter(b);
         auto A = b.Make(1, b.at(B) + t * (b.at(C) - b.at(B)));
         auto X = b.Alias(0, A);
         return Draft{{X, A, B, C}, {}};
       }},
      {"eqangle2",
       [](Builder& b) {
         auto X = b.Free(0), A = b.Free(1), B = b.Free(2);
         const double d = 2.0 * Dir(b.at(X), b.at(A)) - Dir(b.at(X), b.at(B));
         auto C = b.Make(3, b.at(X) + b.Length() * Unit(d));
         return Draft{{X, A, B, C}, {}};
       }},
      {"eqangle3",
       [](Builder& b) {
         auto X = b.Free(0), A = b.Free(1), B = b.Free(2), D = b.Free(3), E = b.Free(4);
         const double alpha = Dir(b.at(A), b.at(X)) - Dir(b.at(X), b.at(B));
         auto F = b.Make(5, b.at(E) + b.Length() * Unit(Dir(b.at(D), b.at(E)) - alpha));
         return Draft{{X, A, B, D, E, F}, {}};
       }},
      {"eqratio6",
       [](Builder& b) {
         auto X = b.Free(0), A = b.Free(1), C = b.Free(2), E = b.Free(3), F = b.Free(4),
              G = b.Free(5);
         const double gh = Dist(b.at(E), b.at(F)) * Dist(b.at(C), b.at(X)) /
                           Dist(b.at(A), b.at(X));
         auto H = b.Make(6, b.at(G) + gh * Unit(b.Heading()));
         return Draft{{X, A, C, E, F, G, H}, {}};
       }},
  };
  return *recipes;
}

// One attempt at a step. On failure `points` and `next_name` are restored.
std::optional<PredicateStep> TryStep(const CatalogEntry& entry, std::mt19937_64& rng,
                                     std::vector<PointDecl>& points, bool chain,
                                     double reuse_probability, int& next_name) {
  const auto it = Recipes().find(entry.name);
  if (it == Recipes().end()) {
    throw Error("no sampling recipe for '" + std::string(entry.name) + "'");
  }
  const size_t saved_size = points.size();
  const int saved_name = next_name;
  Builder builder(rng, points, entry, chain, reuse_probability, next_name);
  const Draft draft = it->second(builder);

  PredicateStep step;
  step.predicate = std::string(entry.name);
  for (const auto& name : draft.points) step.args.emplace_back(name);
  for (double v : draft.numbers) step.args.emplace_back(v);

  bool ok = builder.ok();
  if (ok) {
    try {
      ok = CheckSatisfaction(CompilePredicate(step), PointMap(points), kSampleTol);
    } catch (const Error&) {
      ok = false;
    }
  }
  if (!ok) {
    points.resize(saved_size);
    next_name = saved_name;
    return std::nullopt;
  }
  return step;
}

}  // namespace

uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SampledStep SampleConfiguration(const CatalogEntry& entry, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<PointDecl> points;
    int unused_names = 0;
    if (auto step = TryStep(entry, rng, points, false, 0.0, unused_names)) {
      return {std::move(points), std::move(*step)};
    }
  }
  throw Error("could not sample a configuration for '" + std::string(entry.name) + "'");
}

SampledProblem SampleProblem(uint64_t seed, const ProblemShape& shape) {
  if (shape.min_steps < 1 || shape.max_steps < shape.min_steps) {
    throw Error("invalid problem shape");
  }
  std::mt19937_64 rng(seed);
  const auto catalog = Catalog();
  const int span = shape.max_steps - shape.min_steps + 1;
  const int n_steps = shape.min_steps + static_cast<int>(rng() % static_cast<uint64_t>(span));

  SampledProblem problem;
  int next_name = 0;
  while (static_cast<int>(problem.skeleton.steps.size()) < n_steps) {
    const CatalogEntry& entry = catalog[rng() % catalog.size()];
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      if (auto step = TryStep(entry, rng, problem.points, true, shape.reuse_probability,
                              next_name)) {
        step->index = static_cast<int>(problem.skeleton.steps.size());
        problem.skeleton.steps.push_back(std::move(*step));
        break;
      }
    }
  }
  return problem;
}

}  // namespace goalcheck
