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

#include "goalcheck/dataset.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

#include "goalcheck/error.h"
#include "goalcheck/svg.h"
#include "json.hpp"

namespace goalcheck {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::string_view kInstanceExtension = ".gc";

fs::path InstancePath(const fs::path& dir, const std::string& id) {
  return dir / "instances" / (id + std::string(kInstanceExtension));
}

json StatsToJsonValue(const DatasetStats& stats) {
  json lengths = json::object();
  for (const auto& [len, n] : stats.proof_lengths) lengths[std::to_string(len)] = n;
  json preds = json::object();
  for (const auto& [name, n] : stats.predicates) preds[name] = n;
  return json{{"count", stats.count}, {"proof_lengths", lengths}, {"predicates", preds}};
}

DatasetStats StatsFromJsonValue(const json& j) {
  DatasetStats stats;
  stats.count = j.at("count").get<size_t>();
  for (const auto& [key, value] : j.at("proof_lengths").items()) {
    stats.proof_lengths[std::stoi(key)] = value.get<size_t>();
  }
  for (const auto& [key, value] : j.at("predicates").items()) {
    stats.predicates[key] = value.get<size_t>();
  }
  return stats;
}

std::string Percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

std::string DatasetStats::ToJson() const { return StatsToJsonValue(*this).dump(2) + "\n"; }

std::string DatasetStats::ToText() const {
  std::ostringstream out;
  out << "instances: " << count << "\n";
  out << "proof length histogram:\n";
  for (const auto& [len, n] : proof_lengths) out << "  " << len << ": " << n << "\n";
  size_t total_steps = 0;
  for (const auto& [name, n] : predicates) total_steps += n;
  out << "predicate frequency (" << total_steps << " steps):\n";
  for (const auto& [name, n] : predicates) {
    out << "  " << name << ": " << n << " ("
        << Percent(100.0 * static_cast<double>(n) / static_cast<double>(total_steps))
        << "%)\n";
  }
  return out.str();
}

DatasetStats ComputeStats(std::span<const InstanceFile> instances) {
  if (instances.empty()) throw DataError("dataset has no instances");
  DatasetStats stats;
  stats.count = instances.size();
  for (const auto& inst : instances) {
    ++stats.proof_lengths[static_cast<int>(inst.skeleton.steps.size())];
    for (const auto& step : inst.skeleton.steps) ++stats.predicates[step.predicate];
  }
  return stats;
}

std::string ManifestToJson(const DatasetManifest& manifest) {
  const json j{{"split", manifest.split},
               {"ids", manifest.ids},
               {"stats", StatsToJsonValue(manifest.stats)},
               {"prompt_template", std::string(kPromptTemplateVersion)}};
  return j.dump(2) + "\n";
}

DatasetManifest ParseManifest(std::string_view text) {
  DatasetManifest m;
  try {
    const json j = json::parse(text);
    m.split = j.at("split").get<std::string>();
    m.ids = j.at("ids").get<std::vector<std::string>>();
    m.stats = StatsFromJsonValue(j.at("stats"));
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed manifest: ") + e.what());
  }
  if (m.ids.empty()) throw DataError("manifest lists no instances");
  if (m.stats.count != m.ids.size()) {
    throw DataError("manifest stats count differs from its id list");
  }
  return m;
}

std::vector<InstanceFile> GenerateSplit(const std::string& split, size_t count,
                                        uint64_t seed, const ProblemShape& shape) {
  std::vector<InstanceFile> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    char id[64];
    std::snprintf(id, sizeof(id), "%s-%04zu", split.c_str(), i);
    out.push_back(GenerateInstance(id, DeriveSeed(seed, i), shape));
  }
  return out;
}

std::string ReadTextFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void WriteTextFile(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw DataError("write failed for " + path.string());
}

DatasetManifest WriteDataset(const fs::path& dir, const std::string& split,
                             std::vector<InstanceFile> instances, bool with_diagrams) {
  DatasetManifest manifest;
  manifest.split = split;
  manifest.stats = ComputeStats(instances);
  for (auto& inst : instances) {
    if (with_diagrams) {
      const std::string rel = "diagrams/" + inst.id + ".svg";
      inst.diagram = rel;
      WriteTextFile(dir / rel, RenderSvg(inst));
    }
    WriteTextFile(InstancePath(dir, inst.id), SerializeInstance(inst));
    manifest.ids.push_back(inst.id);
  }
  WriteTextFile(dir / "manifest.json", ManifestToJson(manifest));
  return manifest;
}

DatasetManifest ReadManifest(const fs::path& dir) {
  return ParseManifest(ReadTextFile(dir / "manifest.json"));
}

std::vector<InstanceFile> LoadDataset(const fs::path& dir) {
  const DatasetManifest manifest = ReadManifest(dir);
  std::vector<InstanceFile> out;
  out.reserve(manifest.ids.size());
  for (const auto& id : manifest.ids) {
    const fs::path path = InstancePath(dir, id);
    if (!fs::exists(path)) throw DataError("missing instance file " + path.string());
    InstanceFile inst;
    try {
      inst = ParseInstance(ReadTextFile(path));
    } catch (const ParseError& e) {
      throw DataError(path.string() + ": " + e.what());
    }
    if (inst.id != id) throw DataError(path.string() + ": id differs from manifest");
    out.push_back(std::move(inst));
  }
  size_t on_disk = 0;
  for (const auto& entry : fs::directory_iterator(dir / "instances")) {
    if (entry.path().extension() == kInstanceExtension) ++on_disk;
  }
  if (on_disk != manifest.ids.size()) {
    throw DataError("manifest lists " + std::to_string(manifest.ids.size()) +
                    " instances but " + std::to_string(on_disk) + " files are present");
  }
  return out;
}

DatasetStats DatasetStatsFromDisk(const fs::path& dir) {
  const DatasetManifest manifest = ReadManifest(dir);
  const DatasetStats stats = ComputeStats(LoadDataset(dir));
  if (!(stats == manifest.stats)) throw DataError("manifest stats differ from instance files");
  return stats;
}

std::vector<std::string> LoadResponses(std::span<const InstanceFile> instances,
                                       const fs::path& responses_dir, bool strict) {
  std::vector<std::string> out;
  out.reserve(instances.size());
  for (const auto& inst : instances) {
    const fs::path path = responses_dir / (inst.id + ".txt");
    if (!fs::exists(path)) {
      if (strict) throw DataError("missing response file " + path.string());
      out.emplace_back();
      continue;
    }
    out.push_back(ReadTextFile(path));
  }
  return out;
}

ScoreReport ScoreResponses(std::span<const InstanceFile> instances,
                           std::span<const std::string> responses,
                           const ScoreOptions& options) {
  if (instances.size() != responses.size()) {
    throw Error("every instance needs exactly one response");
  }
  ScoreReport report;
  report.instances.resize(instances.size());

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(instances.size())));
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  const auto work = [&](unsigned worker) {
    try {
      for (size_t i = next++; i < instances.size(); i = next++) {
        const auto& inst = instances[i];
        const StructuredResponse parsed =
            ParseResponse(responses[i], inst.subgoals.size(), options.response);
        report.instances[i] = {inst.id,
                               ScoreInstance(parsed, inst.subgoals, options.equivalence)};
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<InstanceScore> scores;
  scores.reserve(report.instances.size());
  for (const auto& s : report.instances) scores.push_back(s.score);
  report.metrics = Aggregate(scores);
  return report;
}

std::string ScoreReport::ToJson() const {
  json per = json::array();
  for (const auto& s : instances) {
    per.push_back(json{{"id", s.id},
                       {"per_goal", s.score.per_goal},
                       {"p", s.score.p},
                       {"c", s.score.c},
                       {"fa", s.score.fa}});
  }
  const json j{{"instances", per},
               {"aggregate",
                {{"n", metrics.n_instances},
                 {"sr", metrics.sr},
                 {"sc", metrics.sc},
                 {"cr", metrics.cr},
                 {"fa", metrics.fa}}}};
  return j.dump(2) + "\n";
}

std::string ScoreReport::ToText() const {
  std::ostringstream out;
  out << "instances: " << metrics.n_instances << "\n";
  out << "SR: " << Percent(metrics.sr) << "\n";
  out << "SC: " << Percent(metrics.sc) << "\n";
  out << "CR: " << Percent(metrics.cr) << "\n";
  out << "FA: " << Percent(metrics.fa) << "\n";
  return out.str();
}

}  // namespace goalcheck
