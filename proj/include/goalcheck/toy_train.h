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

// A contextual bandit over benchmark problems. Each problem offers a fixed
// set of candidate responses; the policy picks one, the verifier scores it
// sub-goal by sub-goal, and the clipped objective updates the logits.
//
// Per iteration and problem: sample G candidates from pi_old, reward them
// (with that iteration's sub-goal mask), normalize within the group, then
// take `inner_epochs` plain gradient steps on the objective.

#ifndef GOALCHECK_TOY_TRAIN_H_
#define GOALCHECK_TOY_TRAIN_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "goalcheck/answer.h"
#include "goalcheck/reward.h"
#include "goalcheck/subgoal.h"

namespace goalcheck {

struct BanditInstance {
  std::vector<SubGoal> goals;
  // Raw response texts; at least one must verify fully correct.
  std::vector<std::string> candidates;
};

enum class Optimizer { kGrpo, kPpo };

struct TrainConfig {
  RewardConfig reward;
  Optimizer optimizer = Optimizer::kGrpo;
  int iterations = 500;
  double learning_rate = 0.5;
  int inner_epochs = 1;
  EquivalenceConfig equivalence;

  // Throws Error on an out-of-range field.
  void Validate() const;
};

struct TraceRecord {
  int iteration = 0;
  // Mean sampled reward over all groups of the iteration.
  double mean_group_reward = 0.0;
  // Exact expected unmasked reward of the policy after the update.
  double expected_reward = 0.0;
  // Mean over problems of the objective at the final inner epoch.
  double loss = 0.0;
  double surrogate = 0.0;
  double kl = 0.0;
  // Norm of the gradient of the summed objective at the final inner epoch.
  double grad_norm = 0.0;
};

struct TrainTrace {
  // Best achievable expected reward: mean over problems of the best
  // candidate's reward.
  double optimum = 0.0;
  std::vector<TraceRecord> records;

  // One JSON object per line, numbers in shortest round-trip form.
  std::string ToJsonLines() const;
};

struct TrainResult {
  TrainTrace trace;
  ToyPolicy policy;
  ToyPolicy reference;
};

// Rewards of every candidate, computed once; verification is a pure
// function, so caching does not change the trajectory.
struct CandidateVerdicts {
  // [problem][candidate] -> per-goal verdicts.
  std::vector<std::vector<std::vector<bool>>> verdicts;
};

CandidateVerdicts VerifyCandidates(std::span<const BanditInstance> env,
                                   const EquivalenceConfig& cfg = {});

double ExpectedReward(const ToyPolicy& policy, const CandidateVerdicts& verdicts,
                      RewardMode mode);
double OptimalReward(const CandidateVerdicts& verdicts, RewardMode mode);

// Deterministic given the seed in cfg.reward. Throws Error for an invalid
// config or a problem without a fully correct candidate.
TrainResult ToyTrain(std::span<const BanditInstance> env, const TrainConfig& cfg);

// `count` sampled problems, each with `num_candidates` responses: one fully
// correct, the rest with random wrong answers, in shuffled order.
std::vector<BanditInstance> MakeBanditEnv(size_t count, size_t num_candidates,
                                          uint64_t seed);

}  // namespace goalcheck

#endif  // GOALCHECK_TOY_TRAIN_H_
