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

#include "goalcheck/toy_train.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "goalcheck/error.h"
#include "goalcheck/numeric_text.h"
#include "goalcheck/response.h"
#include "goalcheck/sampler.h"

namespace goalcheck {
namespace {

// Stream offsets keep the mask seeds apart from the sampling stream.
constexpr uint64_t kMaskStream = 0x6d61736bULL;

std::vector<size_t> CandidateCounts(std::span<const BanditInstance> env) {
  std::vector<size_t> counts;
  counts.reserve(env.size());
  for (const auto& inst : env) counts.push_back(inst.candidates.size());
  return counts;
}

std::string WrongAnswer(const SubGoal& goal, std::mt19937_64& rng) {
  const double shift = 1.0 + static_cast<double>(rng() % 7);
  if (IsAngular(goal.kind)) return FormatNumber(ReduceMod180(goal.expected + 10.0 * shift));
  return FormatNumber(goal.expected + 0.5 * shift);
}

ObjectiveResult Objective(const TrainConfig& cfg, const ToyPolicy& policy,
                          const ToyPolicy& old_policy, const ToyPolicy& ref, size_t ctx,
                          std::span<const size_t> samples, std::span<const double> adv) {
  if (cfg.optimizer == Optimizer::kPpo) {
    return PpoObjective(policy, old_policy, ref, ctx, samples, adv, cfg.reward);
  }
  return GrpoObjective(policy, old_policy, ref, ctx, samples, adv, cfg.reward);
}

}  // namespace

void TrainConfig::Validate() const {
  reward.Validate();
  if (iterations < 0) throw Error("iterations must be non-negative");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw Error("learning rate must be positive");
  }
  if (inner_epochs < 1) throw Error("inner_epochs must be at least 1");
}

std::string TrainTrace::ToJsonLines() const {
  std::string out;
  for (const auto& r : records) {
    out += "{\"iteration\":" + std::to_string(r.iteration) +
           ",\"mean_group_reward\":" + FormatNumber(r.mean_group_reward) +
           ",\"expected_reward\":" + FormatNumber(r.expected_reward) +
           ",\"optimum\":" + FormatNumber(optimum) + ",\"loss\":" + FormatNumber(r.loss) +
           ",\"surrogate\":" + FormatNumber(r.surrogate) + ",\"kl\":" + FormatNumber(r.kl) +
           ",\"grad_norm\":" + FormatNumber(r.grad_norm) + "}\n";
  }
  return out;
}

CandidateVerdicts VerifyCandidates(std::span<const BanditInstance> env,
                                   const EquivalenceConfig& cfg) {
  CandidateVerdicts out;
  out.verdicts.reserve(env.size());
  for (const auto& inst : env) {
    if (inst.goals.empty()) throw Error("bandit problem has no sub-goals");
    if (inst.candidates.empty()) throw Error("bandit problem has no candidates");
    auto& row = out.verdicts.emplace_back();
    for (const auto& text : inst.candidates) {
      const StructuredResponse parsed = ParseResponse(text, inst.goals.size());
      row.push_back(ScoreInstance(parsed, inst.goals, cfg).per_goal);
    }
  }
  return out;
}

double ExpectedReward(const ToyPolicy& policy, const CandidateVerdicts& verdicts,
                      RewardMode mode) {
  double total = 0.0;
  for (size_t ctx = 0; ctx < verdicts.verdicts.size(); ++ctx) {
    const std::vector<double> p = policy.Probabilities(ctx);
    double e = 0.0;
    for (size_t c = 0; c < p.size(); ++c) e += p[c] * TrajectoryReward(verdicts.verdicts[ctx][c], mode);
    total += e;
  }
  return total / static_cast<double>(verdicts.verdicts.size());
}

double OptimalReward(const CandidateVerdicts& verdicts, RewardMode mode) {
  double total = 0.0;
  for (const auto& row : verdicts.verdicts) {
    double best = 0.0;
    for (const auto& v : row) best = std::max(best, TrajectoryReward(v, mode));
    total += best;
  }
  return total / static_cast<double>(verdicts.verdicts.size());
}

TrainResult ToyTrain(std::span<const BanditInstance> env, const TrainConfig& cfg) {
  cfg.Validate();
  if (env.empty()) throw Error("bandit environment is empty");
  const CandidateVerdicts cache = VerifyCandidates(env, cfg.equivalence);
  for (size_t ctx = 0; ctx < env.size(); ++ctx) {
    const auto& row = cache.verdicts[ctx];
    const bool solvable = std::any_of(row.begin(), row.end(), [](const std::vector<bool>& v) {
      return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    });
    if (!solvable) {
      throw Error("problem " + std::to_string(ctx) + " has no fully correct candidate");
    }
  }

  const RewardConfig& rc = cfg.reward;
  const size_t group = static_cast<size_t>(rc.group_size);
  TrainResult result;
  result.reference = ToyPolicy(CandidateCounts(env));
  result.policy = result.reference;
  result.trace.optimum = OptimalReward(cache, rc.mode);

  std::mt19937_64 rng(rc.seed);
  std::vector<std::vector<size_t>> samples(env.size());
  std::vector<std::vector<double>> advantages(env.size());

  for (int it = 1; it <= cfg.iterations; ++it) {
    const ToyPolicy old_policy = result.policy;
    TraceRecord rec;
    rec.iteration = it;

    double reward_sum = 0.0;
    for (size_t ctx = 0; ctx < env.size(); ++ctx) {
      const size_t n_goals = env[ctx].goals.size();
      const std::vector<bool> mask =
          rc.mask_ratio > 0.0
              ? ApplyMask(n_goals, rc.mask_ratio,
                          DeriveSeed(DeriveSeed(rc.seed ^ kMaskStream, static_cast<uint64_t>(it)),
                                     ctx))
              : std::vector<bool>{};
      samples[ctx].resize(group);
      std::vector<double> rewards(group);
      for (size_t k = 0; k < group; ++k) {
        samples[ctx][k] = old_policy.Sample(ctx, rng);
        rewards[k] = TrajectoryReward(cache.verdicts[ctx][samples[ctx][k]], rc.mode, mask);
        reward_sum += rewards[k];
      }
      advantages[ctx] = GroupAdvantages(rewards, rc.adv_epsilon).advantages;
    }
    rec.mean_group_reward = reward_sum / static_cast<double>(env.size() * group);

    for (int epoch = 0; epoch < cfg.inner_epochs; ++epoch) {
      double loss = 0.0;
      double surrogate = 0.0;
      double kl = 0.0;
      double grad_sq = 0.0;
      std::vector<std::vector<double>> grads(env.size());
      for (size_t ctx = 0; ctx < env.size(); ++ctx) {
        ObjectiveResult obj = Objective(cfg, result.policy, old_policy, result.reference, ctx,
                                        samples[ctx], advantages[ctx]);
        loss += obj.loss;
        surrogate += obj.surrogate;
        kl += obj.kl;
        for (double g : obj.gradient) grad_sq += g * g;
        grads[ctx] = std::move(obj.gradient);
      }
      // Problems own disjoint logits, so one step on the summed objective
      // moves each problem by its own gradient.
      for (size_t ctx = 0; ctx < env.size(); ++ctx) {
        auto z = result.policy.mutable_logits(ctx);
        for (size_t j = 0; j < z.size(); ++j) z[j] -= cfg.learning_rate * grads[ctx][j];
      }
      const double n = static_cast<double>(env.size());
      rec.loss = loss / n;
      rec.surrogate = surrogate / n;
      rec.kl = kl / n;
      rec.grad_norm = std::sqrt(grad_sq);
    }
    rec.expected_reward = ExpectedReward(result.policy, cache, rc.mode);
    result.trace.records.push_back(rec);
  }
  return result;
}

std::vector<BanditInstance> MakeBanditEnv(size_t count, size_t num_candidates,
                                          uint64_t seed) {
  if (num_candidates < 2) throw Error("a bandit problem needs at least two candidates");
  std::vector<BanditInstance> env;
  env.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    const uint64_t problem_seed = DeriveSeed(seed, i);
    const SampledProblem problem = SampleProblem(problem_seed);
    BanditInstance inst;
    inst.goals = CompileSkeleton(problem.skeleton);
    std::mt19937_64 rng(DeriveSeed(problem_seed, 1));
    const size_t n = inst.goals.size();

    std::vector<std::string> truth;
    for (const auto& g : inst.goals) truth.push_back(FormatNumber(g.expected));
    inst.candidates.push_back(EmitResponse(truth));
    while (inst.candidates.size() < num_candidates) {
      std::vector<std::string> answers = truth;
      // At least one wrong answer, so only the first candidate is optimal.
      const size_t forced = rng() % n;
      for (size_t t = 0; t < n; ++t) {
        if (t == forced || rng() % 2 == 0) answers[t] = WrongAnswer(inst.goals[t], rng);
      }
      inst.candidates.push_back(rng() % 2 == 0 ? EmitResponse(answers)
                                               : EmitLineResponse(answers));
    }
    // Fisher-Yates on our own generator keeps the order portable.
    for (size_t j = inst.candidates.size() - 1; j > 0; --j) {
      std::swap(inst.candidates[j], inst.candidates[rng() % (j + 1)]);
    }
    env.push_back(std::move(inst));
  }
  return env;
}

}  // namespace goalcheck
