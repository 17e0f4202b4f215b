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

// Structured model responses and skeleton metrics.
//
// For an instance with n sub-goals and per-goal verdicts v_1..v_n:
//   p  = mean(v)     fraction of sub-goals solved
//   c  = prod(v)     every sub-goal solved
//   fa = v_n         the original final goal solved
// Over a dataset, SR/SC/FA are 100 * the means of p/c/fa, and the consistency
// ratio CR = 100 * SC / SR (0 when SR is 0). CR exists only at dataset level.

#ifndef GOALCHECK_RESPONSE_H_
#define GOALCHECK_RESPONSE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goalcheck/answer.h"
#include "goalcheck/subgoal.h"

namespace goalcheck {

struct StructuredResponse {
  std::string think;
  // Exactly n_expected slots. nullopt marks a missing answer, which always
  // verifies as incorrect.
  std::vector<std::optional<std::string>> answers;
  // How many answers the response actually gave, before padding/truncation.
  size_t raw_count = 0;
  bool has_answer_block = false;
};

struct ResponseOptions {
  // Throw ParseError instead of scoring a response with no answer block.
  bool strict = false;
};

// Takes the last complete <answer>...</answer> block. Inside it, accepts a
// bracketed list "[v0, v1, ...]" or lines "T0 = v0" / "T0: v0"; anything
// else is split on commas and newlines.
StructuredResponse ParseResponse(std::string_view text, size_t n_expected,
                                 const ResponseOptions& options = {});

// Renders answers in the bracketed format inside think/answer tags.
std::string EmitResponse(std::span<const std::string> answers,
                         std::string_view think = "");
// Same answers, one "T<i> = v" line each.
std::string EmitLineResponse(std::span<const std::string> answers,
                             std::string_view think = "");

struct InstanceScore {
  double p = 0.0;
  int c = 0;
  int fa = 0;
  std::vector<bool> per_goal;

  // Derives p, c, fa from the verdict vector. Requires a non-empty vector.
  static InstanceScore FromVerdicts(std::vector<bool> verdicts);
};

InstanceScore ScoreInstance(const StructuredResponse& response,
                            std::span<const SubGoal> goals,
                            const EquivalenceConfig& cfg = {});

struct DatasetMetrics {
  double sr = 0.0;
  double sc = 0.0;
  double cr = 0.0;
  double fa = 0.0;
  size_t n_instances = 0;
};

// Throws Error on an empty list. Independent of the order of `scores`.
DatasetMetrics Aggregate(std::span<const InstanceScore> scores);

}  // namespace goalcheck

#endif  // GOALCHECK_RESPONSE_H_
