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

// Datasets on disk and their scoring.
//
//   <dir>/manifest.json          split, ids, stats
//   <dir>/instances/<id>.gc      one instance file per id
//   <dir>/diagrams/<id>.svg      optional
//
// A responses directory holds raw model text in <id>.txt.

#ifndef GOALCHECK_DATASET_H_
#define GOALCHECK_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "goalcheck/answer.h"
#include "goalcheck/instance.h"
#include "goalcheck/response.h"

namespace goalcheck {

struct DatasetStats {
  size_t count = 0;
  // Proof length (number of skeleton steps) -> instances.
  std::map<int, size_t> proof_lengths;
  // Predicate name -> occurrences over all steps.
  std::map<std::string, size_t> predicates;

  std::string ToJson() const;
  std::string ToText() const;

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

// Throws DataError on an empty list.
DatasetStats ComputeStats(std::span<const InstanceFile> instances);

struct DatasetManifest {
  std::string split;
  std::vector<std::string> ids;
  DatasetStats stats;

  friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

std::string ManifestToJson(const DatasetManifest& manifest);
// Throws DataError for malformed JSON or a manifest without instances.
DatasetManifest ParseManifest(std::string_view json);

// Instance i gets id "<split>-<iiii>" and seed DeriveSeed(seed, i).
std::vector<InstanceFile> GenerateSplit(const std::string& split, size_t count,
                                        uint64_t seed, const ProblemShape& shape = {});

// Writes instance files, optional diagrams and the manifest. Instances with
// diagrams get their `diagram` field set to the relative SVG path.
DatasetManifest WriteDataset(const std::filesystem::path& dir, const std::string& split,
                             std::vector<InstanceFile> instances, bool with_diagrams);

DatasetManifest ReadManifest(const std::filesystem::path& dir);
// Loads every instance the manifest lists, in manifest order. Throws
// DataError for a missing instance file, an id mismatch, or counts that
// disagree with the instances directory.
std::vector<InstanceFile> LoadDataset(const std::filesystem::path& dir);
// Stats recomputed from the instance files on disk.
DatasetStats DatasetStatsFromDisk(const std::filesystem::path& dir);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

struct ScoredInstance {
  std::string id;
  InstanceScore score;
};

struct ScoreReport {
  std::vector<ScoredInstance> instances;
  DatasetMetrics metrics;

  // Per-instance per-goal booleans plus the aggregate block.
  std::string ToJson() const;
  std::string ToText() const;
};

struct ScoreOptions {
  EquivalenceConfig equivalence;
  ResponseOptions response;
  // 0 picks the hardware concurrency.
  unsigned threads = 0;
};

// `responses[i]` answers `instances[i]`. Instances are scored in parallel and
// merged in input order, so the report does not depend on the thread count.
ScoreReport ScoreResponses(std::span<const InstanceFile> instances,
                           std::span<const std::string> responses,
                           const ScoreOptions& options = {});

// Reads <responses_dir>/<id>.txt for every instance. A missing file scores
// as an empty response, or throws DataError in strict mode.
std::vector<std::string> LoadResponses(std::span<const InstanceFile> instances,
                                       const std::filesystem::path& responses_dir,
                                       bool strict);

}  // namespace goalcheck

#endif  // GOALCHECK_DATASET_H_
