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

#include "cli.h"

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "goalcheck/dataset.h"
#include "goalcheck/error.h"
#include "goalcheck/instance.h"
#include "goalcheck/numeric_text.h"
#include "goalcheck/response.h"
#include "goalcheck/reward.h"
#include "goalcheck/svg.h"
#include "goalcheck/toy_train.h"
#include "json.hpp"

namespace goalcheck {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Raised for semantically invalid flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kJson };

struct RewardFlags {
  std::string mode = "sr";
  int group_size = 8;
  double clip_eps = 0.2;
  double kl_beta = 0.01;
  double mask_ratio = 0.0;
  uint64_t seed = 0;

  void Attach(CLI::App* app) {
    app->add_option("--mode", mode, "Reward mode")
        ->check(CLI::IsMember({"sr", "sc", "fa"}, CLI::ignore_case))
        ->capture_default_str();
    app->add_option("--group-size", group_size, "Samples per problem (G)")
        ->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    app->add_option("--clip-eps", clip_eps, "Clipping threshold")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app->add_option("--kl-beta", kl_beta, "KL coefficient")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app->add_option("--mask-ratio", mask_ratio, "Fraction of non-final sub-goals masked")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app->add_option("--seed", seed, "RNG seed")->capture_default_str();
  }

  RewardConfig Config() const {
    RewardConfig cfg;
    cfg.mode = RewardModeFromName(mode);
    cfg.group_size = group_size;
    cfg.clip_epsilon = clip_eps;
    cfg.kl_beta = kl_beta;
    cfg.mask_ratio = mask_ratio;
    cfg.seed = seed;
    return cfg;
  }
};

void AttachFormat(CLI::App* app, Format& format) {
  app->add_option("--format", format, "Report format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::kText}, {"json", Format::kJson}},
          CLI::ignore_case))
      ->capture_default_str();
}

void AttachTol(CLI::App* app, double& tol) {
  app->add_option("--tol", tol, "Absolute answer tolerance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void Emit(std::ostream& out, const std::optional<std::string>& path, std::string_view text) {
  if (path) {
    WriteTextFile(*path, text);
  } else {
    out << text;
  }
}

// Parses one verdict vector: tokens 0/1/true/false separated by spaces,
// commas or brackets.
std::vector<bool> ParseVerdicts(std::string_view text) {
  std::vector<bool> out;
  std::string token;
  const auto flush = [&]() {
    if (token.empty()) return;
    if (token == "1" || token == "true" || token == "T") {
      out.push_back(true);
    } else if (token == "0" || token == "false" || token == "F") {
      out.push_back(false);
    } else {
      throw ParseError("bad verdict '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == ',' || c == '[' || c == ']' || c == '\r') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

std::vector<std::vector<bool>> ParseVerdictLines(std::string_view text) {
  std::vector<std::vector<bool>> rows;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    const std::string_view t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    try {
      rows.push_back(ParseVerdicts(t));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (rows.back().empty()) throw ParseError("empty verdict row", line_no);
  }
  return rows;
}

std::string Percent(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << v;
  return s.str();
}

std::string MetricsJson(const DatasetMetrics& m) {
  return json{{"n", m.n_instances}, {"sr", m.sr}, {"sc", m.sc}, {"cr", m.cr}, {"fa", m.fa}}
             .dump(2) +
         "\n";
}

std::string MetricsText(const DatasetMetrics& m) {
  return "instances: " + std::to_string(m.n_instances) + "\nSR: " + Percent(m.sr) +
         "\nSC: " + Percent(m.sc) + "\nCR: " + Percent(m.cr) + "\nFA: " + Percent(m.fa) + "\n";
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sub-goal verification benchmark tools", "goalcheck"};
  app.require_subcommand(1);
  std::function<void()> action;

  // compile
  std::string compile_in;
  std::optional<std::string> compile_out;
  Format compile_format = Format::kText;
  auto* compile = app.add_subcommand("compile", "Compile a skeleton file into sub-goals");
  compile->add_option("skeleton", compile_in, "Skeleton file")->required()->check(CLI::ExistingFile);
  compile->add_option("-o,--out", compile_out, "Output file (default stdout)");
  AttachFormat(compile, compile_format);
  compile->callback([&] {
    action = [&] {
      const auto goals = CompileSkeleton(ParseSkeleton(ReadTextFile(compile_in)));
      if (compile_format == Format::kJson) {
        json arr = json::array();
        for (const auto& g : goals) {
          arr.push_back(json{{"id", g.Label()},
                             {"kind", std::string(KindName(g.kind))},
                             {"expected", g.expected},
                             {"expr", g.expr.Serialize()},
                             {"display", g.expr.Display()}});
        }
        Emit(out, compile_out, arr.dump(2) + "\n");
      } else {
        Emit(out, compile_out, SerializeSubGoals(goals));
      }
    };
  });

  // generate
  std::string gen_out;
  std::string gen_split = "test";
  size_t gen_count = 256;
  uint64_t gen_seed = 0;
  int gen_min_steps = 2;
  int gen_max_steps = 6;
  bool gen_diagrams = false;
  std::optional<std::string> gen_truth;
  std::optional<std::string> gen_skeleton;
  std::optional<std::string> gen_points;
  std::string gen_id = "instance";
  double gen_tol = 0.02;
  auto* generate = app.add_subcommand(
      "generate", "Sample a dataset split, or ingest one skeleton with --skeleton/--points");
  generate->add_option("-o,--out", gen_out, "Dataset directory, or instance file when ingesting")
      ->required();
  generate->add_option("--split", gen_split, "Split name")->capture_default_str();
  generate->add_option("--count", gen_count, "Number of instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--seed", gen_seed, "Sampler seed")->capture_default_str();
  generate->add_option("--min-steps", gen_min_steps, "Shortest skeleton")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--max-steps", gen_max_steps, "Longest skeleton")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_flag("--diagrams", gen_diagrams, "Also render SVG diagrams");
  generate->add_option("--emit-truth", gen_truth,
                       "Write ground-truth responses into this directory");
  auto* skel_opt = generate->add_option("--skeleton", gen_skeleton, "Skeleton file to ingest")
                       ->check(CLI::ExistingFile);
  auto* points_opt = generate->add_option("--points", gen_points, "Point file to ingest")
                         ->check(CLI::ExistingFile);
  skel_opt->needs(points_opt);
  points_opt->needs(skel_opt);
  generate->add_option("--id", gen_id, "Instance id when ingesting")->capture_default_str();
  AttachTol(generate, gen_tol);
  generate->callback([&] {
    action = [&] {
      if (gen_min_steps > gen_max_steps) throw UsageError("--min-steps exceeds --max-steps");
      if (gen_skeleton) {
        InstanceFile inst = BuildInstance(gen_id, ParsePoints(ReadTextFile(*gen_points)),
                                          ParseSkeleton(ReadTextFile(*gen_skeleton)), gen_tol);
        WriteTextFile(gen_out, SerializeInstance(inst));
        if (gen_truth) {
          WriteTextFile(fs::path(*gen_truth) / (inst.id + ".txt"),
                        EmitResponse(GroundTruthAnswers(inst)));
        }
        return;
      }
      ProblemShape shape;
      shape.min_steps = gen_min_steps;
      shape.max_steps = gen_max_steps;
      auto instances = GenerateSplit(gen_split, gen_count, gen_seed, shape);
      if (gen_truth) {
        for (const auto& inst : instances) {
          WriteTextFile(fs::path(*gen_truth) / (inst.id + ".txt"),
                        EmitResponse(GroundTruthAnswers(inst)));
        }
      }
      const DatasetManifest m = WriteDataset(gen_out, gen_split, std::move(instances), gen_diagrams);
      err << "wrote " << m.ids.size() << " instances to " << gen_out << "\n";
    };
  });

  // render
  std::string render_in;
  std::optional<std::string> render_out;
  auto* render = app.add_subcommand("render", "Render an instance as SVG");
  render->add_option("instance", render_in, "Instance file")->required()->check(CLI::ExistingFile);
  render->add_option("-o,--out", render_out, "Output file (default stdout)");
  render->callback([&] {
    action = [&] { Emit(out, render_out, RenderSvg(ParseInstance(ReadTextFile(render_in)))); };
  });

  // verify
  std::string verify_instance;
  std::string verify_response;
  double verify_tol = 0.02;
  bool verify_strict = false;
  Format verify_format = Format::kText;
  auto* verify = app.add_subcommand("verify", "Check one response against an instance");
  verify->add_option("instance", verify_instance, "Instance file")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("response", verify_response, "Response file")
      ->required()
      ->check(CLI::ExistingFile);
  AttachTol(verify, verify_tol);
  verify->add_flag("--strict", verify_strict, "Fail on a response without an answer block");
  AttachFormat(verify, verify_format);
  verify->callback([&] {
    action = [&] {
      const InstanceFile inst = ParseInstance(ReadTextFile(verify_instance));
      ResponseOptions ro;
      ro.strict = verify_strict;
      const StructuredResponse parsed =
          ParseResponse(ReadTextFile(verify_response), inst.subgoals.size(), ro);
      EquivalenceConfig eq;
      eq.tol = verify_tol;
      const InstanceScore s = ScoreInstance(parsed, inst.subgoals, eq);
      if (verify_format == Format::kJson) {
        json goals = json::array();
        for (size_t i = 0; i < s.per_goal.size(); ++i) {
          goals.push_back(json{{"id", inst.subgoals[i].Label()},
                               {"answer", parsed.answers[i] ? json(*parsed.answers[i]) : json()},
                               {"expected", inst.subgoals[i].expected},
                               {"correct", static_cast<bool>(s.per_goal[i])}});
        }
        out << json{{"id", inst.id}, {"goals", goals}, {"p", s.p}, {"c", s.c}, {"fa", s.fa}}
                   .dump(2)
            << "\n";
      } else {
        for (size_t i = 0; i < s.per_goal.size(); ++i) {
          out << inst.subgoals[i].Label() << " " << (s.per_goal[i] ? "correct" : "incorrect")
              << "\n";
        }
        out << "p=" << FormatNumber(s.p) << " c=" << s.c << " fa=" << s.fa << "\n";
      }
    };
  });

  // score
  std::optional<std::string> score_dataset;
  std::optional<std::string> score_responses;
  std::optional<std::string> score_verdicts;
  std::optional<std::string> score_out;
  double score_tol = 0.02;
  bool score_strict = false;
  unsigned score_threads = 0;
  Format score_format = Format::kText;
  auto* score = app.add_subcommand(
      "score", "Score a responses directory against a dataset, or replay --verdicts");
  auto* ds_opt = score->add_option("dataset", score_dataset, "Dataset directory")
                     ->check(CLI::ExistingDirectory);
  auto* resp_opt = score->add_option("responses", score_responses, "Responses directory")
                       ->check(CLI::ExistingDirectory);
  auto* verdict_opt =
      score->add_option("--verdicts", score_verdicts,
                        "File with one verdict row (0/1 per sub-goal) per instance")
          ->check(CLI::ExistingFile);
  ds_opt->needs(resp_opt);
  resp_opt->needs(ds_opt);
  verdict_opt->excludes(ds_opt);
  score->add_option("-o,--out", score_out, "Also write the JSON results file here");
  AttachTol(score, score_tol);
  score->add_flag("--strict", score_strict, "Fail on a missing or unparseable response");
  score->add_option("--threads", score_threads, "Worker threads (0 = all cores)");
  AttachFormat(score, score_format);
  score->callback([&] {
    action = [&] {
      if (score_verdicts) {
        std::vector<InstanceScore> scores;
        for (auto& row : ParseVerdictLines(ReadTextFile(*score_verdicts))) {
          scores.push_back(InstanceScore::FromVerdicts(std::move(row)));
        }
        if (scores.empty()) throw DataError("verdict file has no rows");
        const DatasetMetrics m = Aggregate(scores);
        if (score_out) WriteTextFile(*score_out, MetricsJson(m));
        out << (score_format == Format::kJson ? MetricsJson(m) : MetricsText(m));
        return;
      }
      if (!score_dataset) throw UsageError("score needs <dataset> <responses> or --verdicts");
      const auto instances = LoadDataset(*score_dataset);
      const auto responses = LoadResponses(instances, *score_responses, score_strict);
      ScoreOptions so;
      so.equivalence.tol = score_tol;
      so.response.strict = score_strict;
      so.threads = score_threads;
      const ScoreReport report = ScoreResponses(instances, responses, so);
      if (score_out) WriteTextFile(*score_out, report.ToJson());
      out << (score_format == Format::kJson ? report.ToJson() : report.ToText());
    };
  });

  // reward
  std::vector<std::string> reward_args;
  std::optional<std::string> reward_input;
  RewardFlags reward_flags;
  Format reward_format = Format::kText;
  auto* reward = app.add_subcommand(
      "reward", "Rewards and group advantages for verdict rows (positional row or --input)");
  reward->add_option("verdicts", reward_args, "One verdict row, e.g. 1 1 1 0");
  reward->add_option("--input", reward_input, "File with one verdict row per trajectory")
      ->check(CLI::ExistingFile);
  reward_flags.Attach(reward);
  AttachFormat(reward, reward_format);
  reward->callback([&] {
    action = [&] {
      std::vector<std::vector<bool>> rows;
      if (reward_input) rows = ParseVerdictLines(ReadTextFile(*reward_input));
      if (!reward_args.empty()) {
        std::string joined;
        for (const auto& a : reward_args) joined += a + " ";
        rows.push_back(ParseVerdicts(joined));
        if (rows.back().empty()) throw UsageError("empty verdict row");
      }
      if (rows.empty()) throw UsageError("reward needs a verdict row or --input");
      const RewardConfig cfg = reward_flags.Config();
      cfg.Validate();

      std::vector<double> rewards;
      std::vector<std::vector<bool>> masks;
      for (size_t i = 0; i < rows.size(); ++i) {
        masks.push_back(ApplyMask(rows[i].size(), cfg.mask_ratio, DeriveSeed(cfg.seed, i)));
        rewards.push_back(TrajectoryReward(rows[i], cfg.mode, masks.back()));
      }
      // Consecutive groups of G; a trailing group of one has no advantage.
      std::vector<std::optional<double>> adv(rows.size());
      const size_t g = static_cast<size_t>(cfg.group_size);
      for (size_t start = 0; start < rows.size(); start += g) {
        const size_t end = std::min(rows.size(), start + g);
        if (end - start < 2) continue;
        const RewardGroup group = GroupAdvantages(
            std::span<const double>(rewards).subspan(start, end - start), cfg.adv_epsilon);
        for (size_t i = start; i < end; ++i) adv[i] = group.advantages[i - start];
      }

      if (reward_format == Format::kJson) {
        json arr = json::array();
        for (size_t i = 0; i < rows.size(); ++i) {
          json row{{"reward", rewards[i]}, {"mask", masks[i]}};
          row["advantage"] = adv[i] ? json(*adv[i]) : json();
          arr.push_back(row);
        }
        out << json{{"mode", std::string(RewardModeName(cfg.mode))}, {"trajectories", arr}}
                   .dump(2)
            << "\n";
      } else {
        for (size_t i = 0; i < rows.size(); ++i) {
          out << "reward=" << FormatNumber(rewards[i]);
          if (adv[i]) out << " advantage=" << FormatNumber(*adv[i]);
          out << "\n";
        }
      }
    };
  });

  // train-toy
  RewardFlags train_flags;
  size_t train_problems = 16;
  size_t train_candidates = 4;
  int train_iterations = 500;
  double train_lr = TrainConfig{}.learning_rate;
  int train_epochs = 1;
  uint64_t train_env_seed = 1;
  std::string train_optimizer = "grpo";
  std::optional<std::string> train_out;
  Format train_format = Format::kJson;
  auto* train = app.add_subcommand("train-toy", "Train a softmax policy on a synthetic bandit");
  // Config files are read by the top-level app only; fallthrough lets
  // `train-toy --config f` reach it. Keys go under a [train-toy] section.
  app.set_config("--config", "", "INI or TOML file; train-toy keys under [train-toy]");
  app.allow_config_extras(CLI::config_extras_mode::error);
  train->fallthrough();
  train_flags.Attach(train);
  train->add_option("--problems", train_problems, "Bandit problems")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--candidates", train_candidates, "Candidates per problem")
      ->check(CLI::Range(2, 1 << 16))
      ->capture_default_str();
  train->add_option("--iterations", train_iterations, "Optimization iterations")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  train->add_option("--lr", train_lr, "Gradient step size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--inner-epochs", train_epochs, "Updates per rollout batch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--env-seed", train_env_seed, "Seed of the synthetic problems")
      ->capture_default_str();
  train->add_option("--optimizer", train_optimizer, "Objective entry point")
      ->check(CLI::IsMember({"grpo", "ppo"}, CLI::ignore_case))
      ->capture_default_str();
  train->add_option("-o,--out", train_out, "Trace file (default stdout)");
  AttachFormat(train, train_format);
  train->callback([&] {
    action = [&] {
      TrainConfig cfg;
      cfg.reward = train_flags.Config();
      cfg.iterations = train_iterations;
      cfg.learning_rate = train_lr;
      cfg.inner_epochs = train_epochs;
      cfg.optimizer = train_optimizer == "ppo" ? Optimizer::kPpo : Optimizer::kGrpo;
      const auto env = MakeBanditEnv(train_problems, train_candidates, train_env_seed);
      const TrainResult result = ToyTrain(env, cfg);
      if (train_format == Format::kJson || train_out) {
        Emit(out, train_out, result.trace.ToJsonLines());
      }
      if (train_format == Format::kText) {
        const auto& recs = result.trace.records;
        out << "optimum: " << FormatNumber(result.trace.optimum) << "\n";
        if (!recs.empty()) {
          out << "final expected reward: " << FormatNumber(recs.back().expected_reward) << "\n";
          out << "final kl: " << FormatNumber(recs.back().kl) << "\n";
        }
      }
    };
  });

  // stats
  std::string stats_dir;
  Format stats_format = Format::kText;
  auto* stats = app.add_subcommand("stats", "Dataset statistics from a manifest directory");
  stats->add_option("dataset", stats_dir, "Dataset directory")->required();
  AttachFormat(stats, stats_format);
  stats->callback([&] {
    action = [&] {
      const DatasetStats s = DatasetStatsFromDisk(stats_dir);
      out << (stats_format == Format::kJson ? s.ToJson() : s.ToText());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace goalcheck
