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


#include "goalcheck/reward.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "goalcheck/error.h"
#include "oracles.h"

namespace goalcheck {
namespace {

using Verdicts = std::vector<bool>;
using Logits = std::vector<std::vector<double>>;

using testing::ObjectiveFn;
using testing::Uniform;

TEST(TrajectoryReward, Examples) {
  EXPECT_EQ(TrajectoryReward(Verdicts{true, true, true, false}, RewardMode::kSR), 0.75);
  EXPECT_EQ(TrajectoryReward(Verdicts{true, true, true, true}, RewardMode::kSC), 1.0);
  EXPECT_EQ(TrajectoryReward(Verdicts{true, true, true, false}, RewardMode::kSC), 0.0);
  EXPECT_EQ(TrajectoryReward(Verdicts{false, true, true, true}, RewardMode::kSR,
                             Verdicts{true, false, false, false}),
            1.0);
  EXPECT_EQ(TrajectoryReward(Verdicts{false, true, true, true}, RewardMode::kFA), 1.0);
  EXPECT_EQ(TrajectoryReward(Verdicts{true, true, true, false}, RewardMode::kFA), 0.0);
  EXPECT_THROW(TrajectoryReward(Verdicts{}, RewardMode::kSR), Error);
  EXPECT_THROW(TrajectoryReward(Verdicts{true, false}, RewardMode::kSR, Verdicts{false, true}), Error);
  EXPECT_THROW(TrajectoryReward(Verdicts{true, false}, RewardMode::kSR, Verdicts{false}), Error);
  EXPECT_EQ(TrajectoryReward(InstanceScore::FromVerdicts({true, false}), RewardMode::kSR), 0.5);
}

TEST(TrajectoryReward, ModeOrderingAndFullMask) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20000; ++i) {
    std::vector<bool> v(1 + rng() % 12);
    for (size_t t = 0; t < v.size(); ++t) v[t] = rng() % 4 != 0;
    const double sr = TrajectoryReward(v, RewardMode::kSR);
    const double sc = TrajectoryReward(v, RewardMode::kSC);
    const double fa = TrajectoryReward(v, RewardMode::kFA);
    EXPECT_LE(sc, sr);
    EXPECT_LE(sc, fa);
    EXPECT_GE(sr, 0.0);
    EXPECT_LE(sr, 1.0);
    const auto full = ApplyMask(v.size(), 1.0, rng());
    EXPECT_EQ(TrajectoryReward(v, RewardMode::kSR, full), fa);
    EXPECT_EQ(TrajectoryReward(v, RewardMode::kSC, full), fa);
  }
}

TEST(ApplyMask, Examples) {
  EXPECT_EQ(ApplyMask(5, 0.0, 1), std::vector<bool>(5, false));
  EXPECT_EQ(ApplyMask(5, 1.0, 1), (std::vector<bool>{true, true, true, true, false}));
  const auto half = ApplyMask(5, 0.5, 42);
  EXPECT_EQ(std::count(half.begin(), half.end(), true), 2);
  EXPECT_FALSE(half.back());
  EXPECT_EQ(ApplyMask(5, 0.5, 42), half);
  EXPECT_EQ(ApplyMask(1, 1.0, 3), std::vector<bool>{false});
  EXPECT_TRUE(ApplyMask(0, 1.0, 3).empty());
  EXPECT_THROW(ApplyMask(5, 1.5, 1), Error);
  EXPECT_THROW(ApplyMask(5, -0.1, 1), Error);
}

TEST(ApplyMask, CountAndUniformity) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 5000; ++i) {
    const size_t n = 1 + rng() % 20;
    const double ratio = static_cast<double>(rng() % 101) / 100.0;
    const auto m = ApplyMask(n, ratio, rng());
    const auto expected = n < 2 ? 0 : static_cast<long>(std::floor(ratio * static_cast<double>(n - 1) + 1e-9));
    EXPECT_EQ(std::count(m.begin(), m.end(), true), expected) << n << " " << ratio;
    EXPECT_FALSE(m.back());
  }
  // Each of the first four slots is masked about half the time at ratio 0.5.
  std::vector<int> hits(5, 0);
  const int trials = 40000;
  for (int s = 0; s < trials; ++s) {
    const auto m = ApplyMask(5, 0.5, static_cast<uint64_t>(s));
    for (size_t t = 0; t < 5; ++t) hits[t] += m[t];
  }
  for (size_t t = 0; t < 4; ++t) EXPECT_NEAR(hits[t] / double(trials), 0.5, 0.015);
  EXPECT_EQ(hits[4], 0);
}

TEST(GroupAdvantages, Examples) {
  const RewardGroup a = GroupAdvantages(std::vector<double>{1, 0});
  EXPECT_EQ(a.mean, 0.5);
  EXPECT_EQ(a.std, 0.5);
  EXPECT_NEAR(a.advantages[0], 1.0, 1e-7);
  EXPECT_NEAR(a.advantages[1], -1.0, 1e-7);
  const RewardGroup b = GroupAdvantages(std::vector<double>{0.5, 0.5, 0.5});
  EXPECT_EQ(b.advantages, (std::vector<double>{0, 0, 0}));
  const RewardGroup c = GroupAdvantages(std::vector<double>{1, 0, 0, 1});
  for (size_t k = 0; k < 4; ++k) EXPECT_NEAR(c.advantages[k], k == 0 || k == 3 ? 1.0 : -1.0, 1e-7);
  EXPECT_THROW(GroupAdvantages(std::vector<double>{1}), Error);
  // The exact formula, with adv_epsilon included.
  EXPECT_EQ(a.advantages[0], 0.5 / (0.5 + 1e-8));
}

TEST(GroupAdvantages, Properties) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 5000; ++i) {
    std::vector<double> r(2 + rng() % 15);
    for (double& v : r) v = static_cast<double>(rng() % 11) / 10.0;
    const RewardGroup g = GroupAdvantages(r);
    if (g.std > 0) {
      EXPECT_NEAR(std::accumulate(g.advantages.begin(), g.advantages.end(), 0.0), 0.0, 1e-9);
    }
    if (g.std > 1e-3) {
      auto shifted = r;
      for (double& v : shifted) v += 0.25;
      const RewardGroup s = GroupAdvantages(shifted);
      auto scaled = r;
      for (double& v : scaled) v *= 3.0;
      const RewardGroup c = GroupAdvantages(scaled);
      for (size_t k = 0; k < r.size(); ++k) {
        EXPECT_NEAR(s.advantages[k], g.advantages[k], 1e-9);
        EXPECT_NEAR(c.advantages[k], g.advantages[k], 1e-6);
        EXPECT_NEAR(GroupAdvantages(scaled, 0.0).advantages[k] * 1.0,
                    GroupAdvantages(r, 0.0).advantages[k], 1e-9);
      }
    }
  }
  // The mean of fifteen copies of 0.3 is not exactly 0.3 in binary.
  const RewardGroup thirds = GroupAdvantages(std::vector<double>(15, 0.3));
  EXPECT_TRUE(std::all_of(thirds.advantages.begin(), thirds.advantages.end(),
                          [](double a) { return a == 0.0; }));
  const std::vector<double> same(8, 1.0);
  const RewardGroup z = GroupAdvantages(same);
  EXPECT_TRUE(std::all_of(z.advantages.begin(), z.advantages.end(), [](double a) { return a == 0.0; }));
}

TEST(ClippedTerm, WorkedValues) {
  EXPECT_EQ(ClippedTerm(1.0, 0.7, 0.2), 0.7);
  EXPECT_EQ(ClippedTerm(2.0, 1.0, 0.2), 1.2);
  EXPECT_EQ(ClippedTerm(0.5, -1.0, 0.2), -0.8);
  EXPECT_THROW(ClippedTerm(0.0, 1.0, 0.2), Error);
  EXPECT_THROW(ClippedTerm(-1.0, 1.0, 0.2), Error);
}

TEST(ClippedTerm, PessimisticBound) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 20000; ++i) {
    const double rho = Uniform(rng, 1e-3, 3.0);
    const double a = Uniform(rng, -3.0, 3.0);
    EXPECT_LE(ClippedTerm(rho, a, 0.2), rho * a);
  }
}

TEST(KlDivergence, Properties) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 2000; ++i) {
    std::vector<double> z1(2 + rng() % 6), z2;
    for (double& v : z1) v = Uniform(rng, -3, 3);
    for (size_t k = 0; k < z1.size(); ++k) z2.push_back(Uniform(rng, -3, 3));
    const ToyPolicy p(Logits{z1, z2});
    const auto a = p.Probabilities(0);
    const auto b = p.Probabilities(1);
    EXPECT_EQ(KlDivergence(a, a), 0.0);
    EXPECT_GE(KlDivergence(a, b), 0.0);
  }
  // Closed form: KL(uniform || softmax(1, 0)) = log((1 + e) / 2) - 1/2.
  const ToyPolicy p(Logits{{0.0, 0.0}, {1.0, 0.0}});
  EXPECT_NEAR(KlDivergence(p.Probabilities(0), p.Probabilities(1)),
              std::log((1 + std::exp(1.0)) / 2) - 0.5, 1e-15);
  EXPECT_THROW(KlDivergence(std::vector<double>{0.5, 0.5}, std::vector<double>{1.0, 0.0}),
               EvalError);
}

TEST(ToyPolicy, SoftmaxAndSampling) {
  const ToyPolicy p(Logits{{0.0, std::log(3.0)}, {1000.0, 0.0, -1000.0}});
  const auto probs = p.Probabilities(0);
  EXPECT_NEAR(probs[0], 0.25, 1e-15);
  EXPECT_NEAR(probs[1], 0.75, 1e-15);
  const auto extreme = p.Probabilities(1);
  EXPECT_EQ(extreme[0], 1.0);
  EXPECT_TRUE(std::isfinite(p.LogProbabilities(1)[2]));
  std::mt19937_64 rng(26);
  int ones = 0;
  for (int i = 0; i < 40000; ++i) ones += p.Sample(0, rng) == 1;
  EXPECT_NEAR(ones / 40000.0, 0.75, 0.01);
  std::mt19937_64 r1(5), r2(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(p.Sample(0, r1), p.Sample(0, r2));
  EXPECT_THROW(ToyPolicy(std::vector<std::vector<double>>{{}}), Error);
  EXPECT_THROW(ToyPolicy(std::vector<std::vector<double>>{{NAN}}), Error);
}

void ExpectGradientsMatch(testing::ObjectiveFn fn, uint64_t seed) {
  const testing::GradientCheck c = testing::CheckObjectiveGradients(fn, seed, 100);
  EXPECT_EQ(c.configs, 100);
  EXPECT_LE(c.worst_rel_error, 1e-4);
  EXPECT_LE(c.worst_loss_error, 1e-12);
  EXPECT_LE(c.worst_decomposition_error, 1e-15);
}

TEST(Objective, GrpoGradientMatchesFiniteDifferences) { ExpectGradientsMatch(&GrpoObjective, 31); }
TEST(Objective, PpoGradientMatchesFiniteDifferences) { ExpectGradientsMatch(&PpoObjective, 32); }

TEST(Objective, Examples) {
  for (ObjectiveFn fn : {&GrpoObjective, &PpoObjective}) {
    const RewardConfig cfg = fn == &GrpoObjective ? GrpoDefaults() : PpoDefaults();
    EXPECT_EQ(cfg.clip_epsilon, 0.2);
    EXPECT_EQ(cfg.kl_beta, 0.01);
    const ToyPolicy pi(Logits{{0.3, -0.2, 0.9}});
    const ToyPolicy ref(Logits{{0.0, 0.0, 0.0}});
    const std::vector<size_t> samples = {0, 2, 2, 1};
    const std::vector<double> zero(4, 0.0);

    // policy == old with zero advantages: pure KL.
    const ObjectiveResult kl_only = fn(pi, pi, ref, 0, samples, zero, cfg);
    const double kl = KlDivergence(pi.Probabilities(0), ref.Probabilities(0));
    EXPECT_NEAR(kl_only.loss, cfg.kl_beta * kl, 1e-15);
    const auto p = pi.Probabilities(0);
    const auto lp = pi.LogProbabilities(0);
    for (size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(kl_only.gradient[j], cfg.kl_beta * p[j] * (lp[j] - std::log(1.0 / 3) - kl), 1e-15);
    }

    // policy == old == ref: zero loss for any advantages that sum to zero.
    const std::vector<double> adv = {1.0, -1.0, 0.5, -0.5};
    EXPECT_NEAR(fn(pi, pi, pi, 0, samples, adv, cfg).loss, 0.0, 1e-15);

    // Two candidates: logits (0, 0) against reference (1, 0).
    const ToyPolicy two(Logits{{0.0, 0.0}}), two_ref(Logits{{1.0, 0.0}});
    const std::vector<size_t> s2 = {0, 1};
    const std::vector<double> a2 = GroupAdvantages(std::vector<double>{0.5, 0.5}).advantages;
    EXPECT_NEAR(fn(two, two, two_ref, 0, s2, a2, cfg).loss,
                0.01 * (std::log((1 + std::exp(1.0)) / 2) - 0.5), 1e-15);

    // Zero probability under the old policy is an error.
    const ToyPolicy degenerate(Logits{{0.0, -1e6}});
    EXPECT_THROW(fn(degenerate, degenerate, degenerate, 0, std::vector<size_t>{1, 0},
                    std::vector<double>{1, -1}, cfg),
                 EvalError);
  }
}

TEST(Objective, OneDescentStepRaisesSurrogate) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    const size_t k = 2 + rng() % 5;
    std::vector<double> z(k);
    for (double& v : z) v = Uniform(rng, -1, 1);
    const ToyPolicy old_policy(Logits{z});
    std::vector<size_t> samples(8);
    std::vector<double> rewards(8);
    for (size_t s = 0; s < 8; ++s) {
      samples[s] = old_policy.Sample(0, rng);
      rewards[s] = static_cast<double>(rng() % 2);
    }
    const auto adv = GroupAdvantages(rewards).advantages;
    RewardConfig cfg;
    cfg.kl_beta = 0.0;
    const ObjectiveResult before = GrpoObjective(old_policy, old_policy, old_policy, 0, samples, adv, cfg);
    ToyPolicy next = old_policy;
    for (size_t j = 0; j < k; ++j) next.mutable_logits(0)[j] -= 0.05 * before.gradient[j];
    const ObjectiveResult after = GrpoObjective(next, old_policy, old_policy, 0, samples, adv, cfg);
    EXPECT_GE(after.surrogate, before.surrogate - 1e-15);
  }
}

TEST(RewardConfig, Validation) {
  EXPECT_NO_THROW(RewardConfig{}.Validate());
  RewardConfig c;
  c.group_size = 1;
  EXPECT_THROW(c.Validate(), Error);
  c = {};
  c.mask_ratio = 1.1;
  EXPECT_THROW(c.Validate(), Error);
  c = {};
  c.kl_beta = -1;
  EXPECT_THROW(c.Validate(), Error);
  EXPECT_EQ(RewardModeFromName("SC"), RewardMode::kSC);
  EXPECT_EQ(RewardModeName(RewardMode::kFA), "fa");
  EXPECT_THROW(RewardModeFromName("xx"), Error);
}

}  // namespace
}  // namespace goalcheck
