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

// Formal predicate language: point declarations, predicate terms such as
// `cong[A,B,C,D]` or `rconst[A,B,C,X,0.5]`, and skeletons (one term per line,
// in proof order, final goal last).

#ifndef GOALCHECK_PREDICATE_H_
#define GOALCHECK_PREDICATE_H_

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "goalcheck/catalog.h"
#include "goalcheck/geometry.h"

namespace goalcheck {

struct PointDecl {
  std::string name;
  Point at;

  friend bool operator==(const PointDecl&, const PointDecl&) = default;
};

// A point reference or a decimal literal.
using PredicateArg = std::variant<std::string, double>;

struct PredicateStep {
  int index = 0;
  std::string predicate;
  std::vector<PredicateArg> args;

  const CatalogEntry& entry() const;
  std::vector<std::string> PointArgs() const;
  std::vector<double> NumberArgs() const;

  friend bool operator==(const PredicateStep&, const PredicateStep&) = default;
};

struct Skeleton {
  std::vector<PredicateStep> steps;

  // The step carrying the original problem's goal: always the last one.
  int final_step_index() const { return static_cast<int>(steps.size()) - 1; }

  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

// ASCII identifier: letter or '_' followed by letters, digits, '_'.
bool IsIdentifier(std::string_view text);

// One `name x y` declaration per line; blank lines are skipped.
// Throws ParseError on duplicate names, malformed or non-finite coordinates.
std::vector<PointDecl> ParsePoints(std::string_view text);
std::string SerializePoints(std::span<const PointDecl> points);

// Parses `name[arg,...]`, validating arity and argument kinds against the
// catalog. The returned step has index 0.
PredicateStep ParsePredicate(std::string_view text);
std::string SerializePredicate(const PredicateStep& step);

// One predicate per line. Blank lines and lines starting with '#' are
// skipped; errors carry the 1-based line number.
Skeleton ParseSkeleton(std::string_view text);
std::string SerializeSkeleton(const Skeleton& skeleton);

// Throws DataError when a step references a point missing from `points`.
void CheckPointReferences(const Skeleton& skeleton,
                          std::span<const PointDecl> points);

}  // namespace goalcheck

#endif  // GOALCHECK_PREDICATE_H_
