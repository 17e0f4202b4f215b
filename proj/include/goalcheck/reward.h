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

// Sub-goal rewards and the clipped policy-gradient objective.
//
// A trajectory's reward is built from its per-sub-goal verdicts (SR: mean,
// SC: product, FA: last). Within a group of G responses to one problem the
// rewards are normalized into advantages
//
//   A_k = (r_k - mean(r)) / (std(r) + adv_epsilon)     (population std)
//
// and the policy minimizes
//
//   loss = -(1/G) sum_k min(rho_k A_k, clip(rho_k, 1-eps, 1+eps) A_k)
//          + beta * KL(pi_theta || pi_ref)
//
// with rho_k = pi_theta(o_k) / pi_old(o_k). Policies here are categorical
// distributions over an enumerated candidate set, so the KL is exact.

#ifndef GOALCHECK_REWARD_H_
#define GOALCHECK_REWARD_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "goalcheck/response.h"

namespace goalcheck {

enum class RewardMode { kSR, kSC, kFA };

std::string_view RewardModeName(RewardMode mode);
// Accepts "sr", "sc", "fa" in any case. Throws Error otherwise.
RewardMode RewardModeFromName(std::string_view name);

struct RewardConfig {
  RewardMode mode = RewardMode::kSR;
  int group_size = 8;
  double adv_epsilon = 1e-8;
  double clip_epsilon = 0.2;
  double kl_beta = 0.01;
  double mask_ratio = 0.0;
  uint64_t seed = 0;

  // Throws Error when a field is out of range (G < 2, ratio outside [0,1],
  // negative epsilons or beta).
  void Validate() const;
};

// Defaults for the two optimizer entry points. In this bandit setting both
// share the clipped core, so only the named defaults differ in intent.
RewardConfig GrpoDefaults();
RewardConfig PpoDefaults();

// Masked indices are excluded from SR/SC. `mask` may be empty (no mask);
// otherwise it must match `per_goal` in length and leave the final goal
// unmasked. Result lies in [0, 1].
double TrajectoryReward(const std::vector<bool>& per_goal, RewardMode mode,
                        const std::vector<bool>& mask = {});
double TrajectoryReward(const InstanceScore& score, RewardMode mode,
                        const std::vector<bool>& mask = {});

// Masks floor(ratio * (n - 1)) of the first n - 1 indices, uniformly at
// random under `seed`. The final index is never masked, so ratio 1 leaves
// only the final answer.
std::vector<bool> ApplyMask(size_t n, double ratio, uint64_t seed);

struct RewardGroup {
  std::vector<double> rewards;
  double mean = 0.0;
  double std = 0.0;
  std::vector<double> advantages;
};

// A_k = (r_k - mean) / (std + adv_epsilon) with the population std; all
// zero when the rewards are identical. Requires at least two rewards.
RewardGroup GroupAdvantages(std::span<const double> rewards,
                            double adv_epsilon = 1e-8);

// min(rho * A, clip(rho, 1 - eps, 1 + eps) * A). Requires rho > 0.
double ClippedTerm(double rho, double advantage, double clip_epsilon);

// Softmax policy: one logit vector per context.
class ToyPolicy {
 public:
  ToyPolicy() = default;
  // All logits zero, i.e. uniform over each context's candidates.
  explicit ToyPolicy(std::vector<size_t> candidates_per_context);
  explicit ToyPolicy(std::vector<std::vector<double>> logits);

  size_t num_contexts() const { return logits_.size(); }
  size_t num_candidates(size_t context) const { return logits_.at(context).size(); }

  std::span<const double> logits(size_t context) const { return logits_.at(context); }
  std::span<double> mutable_logits(size_t context) { return logits_.at(context); }

  std::vector<double> Probabilities(size_t context) const;
  std::vector<double> LogProbabilities(size_t context) const;

  // Inverse-CDF draw using 53 random bits from `rng`.
  size_t Sample(size_t context, std::mt19937_64& rng) const;

  friend bool operator==(const ToyPolicy&, const ToyPolicy&) = default;

 private:
  std::vector<std::vector<double>> logits_;
};

// Exact categorical KL(p || q). q must be positive wherever p is.
double KlDivergence(std::span<const double> p, std::span<const double> q);

struct ObjectiveResult {
  double loss = 0.0;
  // (1/G) sum of clipped terms, before negation.
  double surrogate = 0.0;
  double kl = 0.0;
  // d loss / d logits of the evaluated context.
  std::vector<double> gradient;
};

// `samples` are candidate indices drawn from `old_policy` for `context`,
// paired with their advantages. Throws EvalError when a sample has zero
// probability under the old policy.
ObjectiveResult GrpoObjective(const ToyPolicy& policy, const ToyPolicy& old_policy,
                              const ToyPolicy& ref_policy, size_t context,
                              std::span<const size_t> samples,
                              std::span<const double> advantages,
                              const RewardConfig& cfg);

ObjectiveResult PpoObjective(const ToyPolicy& policy, const ToyPolicy& old_policy,
                             const ToyPolicy& ref_policy, size_t context,
                             std::span<const size_t> samples,
                             std::span<const double> advantages,
                             const RewardConfig& cfg);

}  // namespace goalcheck

#endif  // GOALCHECK_REWARD_H_
