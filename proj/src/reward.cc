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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <string>

#include "goalcheck/error.h"

namespace goalcheck {
namespace {

// The unclipped branch of min(rho A, clip(rho) A) is the active one, so the
// term depends on rho.
bool UnclippedActive(double rho, double advantage, double clip_epsilon) {
  if (advantage > 0.0) return rho <= 1.0 + clip_epsilon;
  if (advantage < 0.0) return rho >= 1.0 - clip_epsilon;
  return false;
}

ObjectiveResult ClippedObjective(const ToyPolicy& policy, const ToyPolicy& old_policy,
                                 const ToyPolicy& ref_policy, size_t context,
                                 std::span<const size_t> samples,
                                 std::span<const double> advantages,
                                 const RewardConfig& cfg) {
  if (samples.size() != advantages.size()) {
    throw Error("samples and advantages differ in length");
  }
  if (samples.empty()) throw Error("objective needs at least one sample");
  const size_t k = policy.num_candidates(context);
  if (old_policy.num_candidates(context) != k || ref_policy.num_candidates(context) != k) {
    throw Error("policies disagree on the candidate set");
  }

  const std::vector<double> pi = policy.Probabilities(context);
  const std::vector<double> log_pi = policy.LogProbabilities(context);
  const std::vector<double> pi_old = old_policy.Probabilities(context);
  const std::vector<double> log_pi_old = old_policy.LogProbabilities(context);
  const std::vector<double> pi_ref = ref_policy.Probabilities(context);
  const std::vector<double> log_pi_ref = ref_policy.LogProbabilities(context);

  ObjectiveResult out;
  out.gradient.assign(k, 0.0);
  const double inv_g = 1.0 / static_cast<double>(samples.size());

  for (size_t s = 0; s < samples.size(); ++s) {
    const size_t o = samples[s];
    if (o >= k) throw Error("sampled candidate index out of range");
    if (!(pi_old[o] > 0.0)) {
      throw EvalError("sampled response has zero probability under the old policy");
    }
    const double a = advantages[s];
    const double rho = std::exp(log_pi[o] - log_pi_old[o]);
    out.surrogate += inv_g * ClippedTerm(rho, a, cfg.clip_epsilon);
    if (UnclippedActive(rho, a, cfg.clip_epsilon)) {
      // d(rho)/dz_j = rho (1[j = o] - pi_j); the loss carries a minus sign.
      for (size_t j = 0; j < k; ++j) {
        const double indicator = j == o ? 1.0 : 0.0;
        out.gradient[j] -= inv_g * a * rho * (indicator - pi[j]);
      }
    }
  }

  out.kl = KlDivergence(pi, pi_ref);
  if (cfg.kl_beta != 0.0) {
    for (size_t j = 0; j < k; ++j) {
      out.gradient[j] += cfg.kl_beta * pi[j] * (log_pi[j] - log_pi_ref[j] - out.kl);
    }
  }
  out.loss = -out.surrogate + cfg.kl_beta * out.kl;
  return out;
}

}  // namespace

std::string_view RewardModeName(RewardMode mode) {
  switch (mode) {
    case RewardMode::kSR:
      return "sr";
    case RewardMode::kSC:
      return "sc";
    case RewardMode::kFA:
      return "fa";
  }
  return "sr";
}

RewardMode RewardModeFromName(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "sr") return RewardMode::kSR;
  if (lower == "sc") return RewardMode::kSC;
  if (lower == "fa") return RewardMode::kFA;
  throw Error("unknown reward mode '" + std::string(name) + "'");
}

void RewardConfig::Validate() const {
  if (group_size < 2) throw Error("group size must be at least 2");
  if (!(adv_epsilon >= 0.0)) throw Error("adv_epsilon must be non-negative");
  if (!(clip_epsilon >= 0.0)) throw Error("clip_epsilon must be non-negative");
  if (!(kl_beta >= 0.0) || !std::isfinite(kl_beta)) throw Error("kl_beta must be non-negative");
  if (!(mask_ratio >= 0.0 && mask_ratio <= 1.0)) throw Error("mask_ratio must lie in [0, 1]");
}

RewardConfig GrpoDefaults() { return RewardConfig{}; }

RewardConfig PpoDefaults() {
  RewardConfig cfg;
  cfg.clip_epsilon = 0.2;
  cfg.kl_beta = 1e-2;
  return cfg;
}

double TrajectoryReward(const std::vector<bool>& per_goal, RewardMode mode,
                        const std::vector<bool>& mask) {
  if (per_goal.empty()) throw Error("trajectory has no sub-goals");
  if (!mask.empty()) {
    if (mask.size() != per_goal.size()) throw Error("mask length differs from sub-goal count");
    if (mask.back()) throw Error("the final sub-goal cannot be masked");
  }
  if (mode == RewardMode::kFA) return per_goal.back() ? 1.0 : 0.0;

  size_t counted = 0;
  size_t correct = 0;
  for (size_t i = 0; i < per_goal.size(); ++i) {
    if (!mask.empty() && mask[i]) continue;
    ++counted;
    if (per_goal[i]) ++correct;
  }
  if (mode == RewardMode::kSC) return correct == counted ? 1.0 : 0.0;
  return static_cast<double>(correct) / static_cast<double>(counted);
}

double TrajectoryReward(const InstanceScore& score, RewardMode mode,
                        const std::vector<bool>& mask) {
  return TrajectoryReward(score.per_goal, mode, mask);
}

std::vector<bool> ApplyMask(size_t n, double ratio, uint64_t seed) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) throw Error("mask ratio must lie in [0, 1]");
  std::vector<bool> mask(n, false);
  if (n < 2) return mask;
  const size_t free_slots = n - 1;
  // The epsilon absorbs representation error such as 0.29 * 100 = 28.999...
  const auto count = std::min(
      free_slots,
      static_cast<size_t>(std::floor(ratio * static_cast<double>(free_slots) + 1e-9)));
  std::vector<size_t> order(free_slots);
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first `count` entries are a uniform subset.
  for (size_t i = 0; i < count; ++i) {
    const size_t span = free_slots - i;
    const size_t j = i + static_cast<size_t>(rng() % span);
    std::swap(order[i], order[j]);
    mask[order[i]] = true;
  }
  return mask;
}

RewardGroup GroupAdvantages(std::span<const double> rewards, double adv_epsilon) {
  if (rewards.size() < 2) throw Error("group normalization needs at least two rewards");
  RewardGroup g;
  g.rewards.assign(rewards.begin(), rewards.end());
  const double n = static_cast<double>(rewards.size());
  g.mean = std::accumulate(rewards.begin(), rewards.end(), 0.0) / n;
  double ss = 0.0;
  for (double r : rewards) ss += (r - g.mean) * (r - g.mean);
  g.std = std::sqrt(ss / n);
  // Identical rewards carry no signal. Testing equality directly matters:
  // the computed mean can be an ulp off, and that deviation divided by
  // adv_epsilon alone is not small.
  const auto [lo, hi] = std::minmax_element(rewards.begin(), rewards.end());
  if (*lo == *hi) {
    g.std = 0.0;
    g.advantages.assign(rewards.size(), 0.0);
    return g;
  }
  g.advantages.reserve(rewards.size());
  const double denom = g.std + adv_epsilon;
  for (double r : rewards) g.advantages.push_back((r - g.mean) / denom);
  return g;
}

double ClippedTerm(double rho, double advantage, double clip_epsilon) {
  if (!(rho > 0.0)) throw Error("importance ratio must be positive");
  const double clipped = std::clamp(rho, 1.0 - clip_epsilon, 1.0 + clip_epsilon);
  return std::min(rho * advantage, clipped * advantage);
}

ToyPolicy::ToyPolicy(std::vector<size_t> candidates_per_context) {
  logits_.reserve(candidates_per_context.size());
  for (size_t k : candidates_per_context) {
    if (k == 0) throw Error("a context needs at least one candidate");
    logits_.emplace_back(k, 0.0);
  }
}

ToyPolicy::ToyPolicy(std::vector<std::vector<double>> logits) : logits_(std::move(logits)) {
  for (const auto& row : logits_) {
    if (row.empty()) throw Error("a context needs at least one candidate");
    for (double z : row) {
      if (!std::isfinite(z)) throw Error("logits must be finite");
    }
  }
}

std::vector<double> ToyPolicy::LogProbabilities(size_t context) const {
  const auto& z = logits_.at(context);
  const double zmax = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double v : z) sum += std::exp(v - zmax);
  const double log_norm = zmax + std::log(sum);
  std::vector<double> out(z.size());
  for (size_t i = 0; i < z.size(); ++i) out[i] = z[i] - log_norm;
  return out;
}

std::vector<double> ToyPolicy::Probabilities(size_t context) const {
  std::vector<double> p = LogProbabilities(context);
  for (double& v : p) v = std::exp(v);
  return p;
}

size_t ToyPolicy::Sample(size_t context, std::mt19937_64& rng) const {
  const std::vector<double> p = Probabilities(context);
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double cdf = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    cdf += p[i];
    if (u < cdf) return i;
  }
  // Rounding can leave the cumulative sum just short of 1.
  for (size_t i = p.size(); i-- > 0;) {
    if (p[i] > 0.0) return i;
  }
  return p.size() - 1;
}

double KlDivergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw Error("distributions differ in support size");
  double kl = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (!(q[i] > 0.0)) throw EvalError("KL divergence is infinite");
    kl += p[i] * (std::log(p[i]) - std::log(q[i]));
  }
  return std::max(0.0, kl);
}

ObjectiveResult GrpoObjective(const ToyPolicy& policy, const ToyPolicy& old_policy,
                              const ToyPolicy& ref_policy, size_t context,
                              std::span<const size_t> samples,
                              std::span<const double> advantages,
                              const RewardConfig& cfg) {
  return ClippedObjective(policy, old_policy, ref_policy, context, samples, advantages, cfg);
}

ObjectiveResult PpoObjective(const ToyPolicy& policy, const ToyPolicy& old_policy,
                             const ToyPolicy& ref_policy, size_t context,
                             std::span<const size_t> samples,
                             std::span<const double> advantages,
                             const RewardConfig& cfg) {
  return ClippedObjective(policy, old_policy, ref_policy, context, samples, advantages, cfg);
}

}  // namespace goalcheck
