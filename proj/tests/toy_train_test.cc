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

#include <gtest/gtest.h>

#include <algorithm>

#include "goalcheck/error.h"
#include "goalcheck/response.h"

namespace goalcheck {
namespace {

TrainConfig Config(uint64_t seed) {
  TrainConfig cfg;
  cfg.reward.seed = seed;
  return cfg;
}

TEST(MakeBanditEnv, ExactlyOneFullyCorrectCandidate) {
  const auto env = MakeBanditEnv(16, 4, 3);
  ASSERT_EQ(env.size(), 16u);
  const CandidateVerdicts v = VerifyCandidates(env);
  for (const auto& row : v.verdicts) {
    ASSERT_EQ(row.size(), 4u);
    const auto correct = std::count_if(row.begin(), row.end(), [](const std::vector<bool>& g) {
      return std::all_of(g.begin(), g.end(), [](bool b) { return b; });
    });
    EXPECT_EQ(correct, 1);
  }
  EXPECT_EQ(OptimalReward(v, RewardMode::kSR), 1.0);
  EXPECT_THROW(MakeBanditEnv(1, 1, 0), Error);
}

TEST(ToyTrain, ReachesOptimumAndIsDeterministic) {
  const auto env = MakeBanditEnv(16, 4, 1);
  for (Optimizer opt : {Optimizer::kGrpo, Optimizer::kPpo}) {
    TrainConfig cfg = Config(5);
    cfg.optimizer = opt;
    const TrainResult a = ToyTrain(env, cfg);
    const TrainResult b = ToyTrain(env, cfg);
    ASSERT_EQ(a.trace.records.size(), 500u);
    EXPECT_EQ(a.trace.ToJsonLines(), b.trace.ToJsonLines());
    EXPECT_EQ(a.policy, b.policy);
    EXPECT_GE(a.trace.records.back().expected_reward, 0.95 * a.trace.optimum);
    EXPECT_EQ(a.trace.records.back().expected_reward,
              ExpectedReward(a.policy, VerifyCandidates(env), RewardMode::kSR));
  }
  const TrainResult other = ToyTrain(env, Config(6));
  EXPECT_NE(other.trace.ToJsonLines(), ToyTrain(env, Config(5)).trace.ToJsonLines());
}

TEST(ToyTrain, StartsUniformAndKlStartsAtZero) {
  const auto env = MakeBanditEnv(4, 3, 2);
  TrainConfig cfg = Config(1);
  cfg.iterations = 1;
  const TrainResult r = ToyTrain(env, cfg);
  EXPECT_EQ(r.reference, ToyPolicy(std::vector<size_t>(4, 3)));
  EXPECT_EQ(r.trace.records[0].kl, 0.0);
  cfg.iterations = 0;
  EXPECT_TRUE(ToyTrain(env, cfg).trace.records.empty());
}

TEST(ToyTrain, StrongKlPenaltyHoldsPolicyNearReference) {
  const auto env = MakeBanditEnv(8, 4, 4);
  TrainConfig cfg = Config(2);
  cfg.reward.kl_beta = 1e3;
  cfg.learning_rate = 1e-4;
  cfg.iterations = 300;
  const TrainResult r = ToyTrain(env, cfg);
  for (const auto& rec : r.trace.records) EXPECT_LE(rec.kl, 0.01) << rec.iteration;
  double kl = 0;
  for (size_t ctx = 0; ctx < env.size(); ++ctx) {
    kl += KlDivergence(r.policy.Probabilities(ctx), r.reference.Probabilities(ctx));
  }
  EXPECT_LE(kl / static_cast<double>(env.size()), 0.01);
}

TEST(ToyTrain, FullMaskTrainsLikeFinalAnswerReward) {
  const auto env = MakeBanditEnv(10, 5, 8);
  TrainConfig masked = Config(3);
  masked.iterations = 60;
  masked.reward.mask_ratio = 1.0;
  TrainConfig fa = masked;
  fa.reward.mask_ratio = 0.0;
  fa.reward.mode = RewardMode::kFA;
  const TrainResult a = ToyTrain(env, masked);
  const TrainResult b = ToyTrain(env, fa);
  EXPECT_EQ(a.policy, b.policy);
  ASSERT_EQ(a.trace.records.size(), b.trace.records.size());
  for (size_t i = 0; i < a.trace.records.size(); ++i) {
    EXPECT_EQ(a.trace.records[i].mean_group_reward, b.trace.records[i].mean_group_reward);
    EXPECT_EQ(a.trace.records[i].loss, b.trace.records[i].loss);
    EXPECT_EQ(a.trace.records[i].kl, b.trace.records[i].kl);
  }
}

TEST(ToyTrain, RejectsInvalidInput) {
  const auto env = MakeBanditEnv(2, 3, 1);
  TrainConfig cfg = Config(0);
  cfg.learning_rate = 0;
  EXPECT_THROW(ToyTrain(env, cfg), Error);
  cfg = Config(0);
  cfg.reward.group_size = 1;
  EXPECT_THROW(ToyTrain(env, cfg), Error);
  cfg = Config(0);
  cfg.inner_epochs = 0;
  EXPECT_THROW(ToyTrain(env, cfg), Error);
  EXPECT_THROW(ToyTrain({}, Config(0)), Error);

  auto unsolvable = env;
  unsolvable[1].candidates = {"<answer>[1000, 1000, 1000, 1000, 1000, 1000]</answer>", "nothing"};
  EXPECT_THROW(ToyTrain(unsolvable, Config(0)), Error);
}

TEST(TrainTrace, JsonLinesShape) {
  TrainTrace t;
  t.optimum = 1;
  t.records.push_back({.iteration = 1, .mean_group_reward = 0.5, .expected_reward = 0.25});
  EXPECT_EQ(t.ToJsonLines(),
            "{\"iteration\":1,\"mean_group_reward\":0.5,\"expected_reward\":0.25,\"optimum\":1,"
            "\"loss\":0,\"surrogate\":0,\"kl\":0,\"grad_norm\":0}\n");
}

}  // namespace
}  // namespace goalcheck
