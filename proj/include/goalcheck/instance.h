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

// Benchmark instances and their on-disk form.
//
// An instance file is plain text made of bracketed sections, in this order:
//
//   [id]        one line
//   [points]    `name x y` per line
//   [premise]   free text
//   [skeleton]  one predicate per line
//   [subgoals]  `T<i> <kind> <expected> <expression>` per line
//   [diagram]   optional, one line: path of the rendered SVG
//   [prompt]    free text, verbatim to end of file
//
// Numbers are written in shortest round-trip form, so a parsed file equals
// the instance that produced it.

#ifndef GOALCHECK_INSTANCE_H_
#define GOALCHECK_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goalcheck/predicate.h"
#include "goalcheck/sampler.h"
#include "goalcheck/subgoal.h"

namespace goalcheck {

inline constexpr std::string_view kPromptTemplateVersion = "v1";

struct InstanceFile {
  std::string id;
  std::vector<PointDecl> points;
  std::string premise;
  Skeleton skeleton;
  // Always CompileSkeleton(skeleton); the last entry is the final goal.
  std::vector<SubGoal> subgoals;
  std::optional<std::string> diagram;
  std::string prompt;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// The raw template with {{premise}}, {{count}}, {{subgoals}}, {{example}}
// placeholders.
std::string_view PromptTemplate();

std::string PremiseText(const std::vector<PointDecl>& points);
std::string PromptText(std::string_view premise, const std::vector<SubGoal>& goals);

// Compiles the skeleton and fills in premise and prompt. Throws DataError
// when a step names an undeclared point or when a sub-goal does not hold for
// the given coordinates within `tol`.
InstanceFile BuildInstance(std::string id, std::vector<PointDecl> points,
                           Skeleton skeleton, double tol = 0.02);

// BuildInstance over SampleProblem(seed, shape).
InstanceFile GenerateInstance(std::string id, uint64_t seed,
                              const ProblemShape& shape = {});

std::string SerializeInstance(const InstanceFile& instance);
// Throws ParseError for malformed text and DataError when the stored
// sub-goals differ from the compiled skeleton.
InstanceFile ParseInstance(std::string_view text);

// Expected values in shortest round-trip form, one per sub-goal.
std::vector<std::string> GroundTruthAnswers(const InstanceFile& instance);

}  // namespace goalcheck

#endif  // GOALCHECK_INSTANCE_H_
