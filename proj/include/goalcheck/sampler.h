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

// Synthetic configurations. Every catalog predicate has a constructive
// recipe: its free points are drawn at random and the remaining points are
// computed so the predicate's lowered target holds up to rounding.

#ifndef GOALCHECK_SAMPLER_H_
#define GOALCHECK_SAMPLER_H_

#include <cstdint>
#include <vector>

#include "goalcheck/catalog.h"
#include "goalcheck/predicate.h"

namespace goalcheck {

struct SampledStep {
  // Named after the entry's parameters ("M", "A", "B" for midp).
  std::vector<PointDecl> points;
  PredicateStep step;
};

// Same seed, same configuration. The compiled target holds at tol 1e-6 and
// every pair of distinct points is at least kMinSeparation apart, except
// where the recipe places two names on one point (reflect).
SampledStep SampleConfiguration(const CatalogEntry& entry, uint64_t seed);

struct ProblemShape {
  int min_steps = 2;
  int max_steps = 6;
  // Chance that a free argument reuses an existing point, which is what
  // links the steps of a chain.
  double reuse_probability = 0.6;
};

struct SampledProblem {
  std::vector<PointDecl> points;
  Skeleton skeleton;
};

// A multi-step skeleton over points named A, B, ..., Z, A1, ... Every step's
// target holds in the final configuration at tol 1e-6.
SampledProblem SampleProblem(uint64_t seed, const ProblemShape& shape = {});

inline constexpr double kMinSeparation = 0.3;

// Mixes two 64-bit values into an independent seed (splitmix64 finalizer).
uint64_t DeriveSeed(uint64_t seed, uint64_t stream);

}  // namespace goalcheck

#endif  // GOALCHECK_SAMPLER_H_
