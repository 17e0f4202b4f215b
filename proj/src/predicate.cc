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

#include "goalcheck/predicate.h"

#include <cctype>
#include <set>
#include <sstream>

#include "goalcheck/error.h"
#include "goalcheck/numeric_text.h"

namespace goalcheck {
namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view text) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

// Rejects targets outside the domain of their quantity kind, e.g. a negative
// ratio or an angle above 180 degrees.
void CheckExpectedDomain(const PredicateStep& step) {
  const auto& entry = step.entry();
  const LoweredTarget target = entry.lower(step.PointArgs(), step.NumberArgs());
  const double v = target.expected;
  switch (target.expr.kind()) {
    case QuantityKind::kAngle:
      if (v < 0.0 || v > 180.0) {
        throw ParseError(std::string(entry.name) +
                         ": angle constant must lie in [0, 180]");
      }
      break;
    case QuantityKind::kRatio:
      if (v <= 0.0) {
        throw ParseError(std::string(entry.name) + ": ratio must be positive");
      }
      break;
    case QuantityKind::kLength:
      if (v <= 0.0) {
        throw ParseError(std::string(entry.name) + ": length must be positive");
      }
      break;
    default:
      break;
  }
}

}  // namespace

const CatalogEntry& PredicateStep::entry() const {
  const CatalogEntry* e = FindPredicate(predicate);
  if (e == nullptr) throw Error("unknown predicate '" + predicate + "'");
  return *e;
}

std::vector<std::string> PredicateStep::PointArgs() const {
  std::vector<std::string> out;
  for (const auto& a : args) {
    if (const auto* name = std::get_if<std::string>(&a)) out.push_back(*name);
  }
  return out;
}

std::vector<double> PredicateStep::NumberArgs() const {
  std::vector<double> out;
  for (const auto& a : args) {
    if (const auto* v = std::get_if<double>(&a)) out.push_back(*v);
  }
  return out;
}

bool IsIdentifier(std::string_view text) {
  if (text.empty()) return false;
  const auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80 || (!std::isalnum(u) && c != '_')) return false;
  }
  return true;
}

std::vector<PointDecl> ParsePoints(std::string_view text) {
  std::vector<PointDecl> points;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty()) continue;
    const auto fields = SplitWhitespace(line);
    if (fields.size() != 3) {
      throw ParseError("point declaration needs 'name x y'", line_no);
    }
    if (!IsIdentifier(fields[0])) {
      throw ParseError("bad point name '" + std::string(fields[0]) + "'", line_no);
    }
    const auto x = ParseNumber(fields[1]);
    const auto y = ParseNumber(fields[2]);
    if (!x || !y) {
      throw ParseError("malformed or non-finite coordinate for point " +
                           std::string(fields[0]),
                       line_no);
    }
    if (!seen.emplace(fields[0]).second) {
      throw ParseError("duplicate point name '" + std::string(fields[0]) + "'",
                       line_no);
    }
    points.push_back({std::string(fields[0]), {*x, *y}});
  }
  return points;
}

std::string SerializePoints(std::span<const PointDecl> points) {
  std::string out;
  for (const auto& p : points) {
    out += p.name + " " + FormatNumber(p.at.x) + " " + FormatNumber(p.at.y) + "\n";
  }
  return out;
}

PredicateStep ParsePredicate(std::string_view text) {
  text = Trim(text);
  const size_t open = text.find('[');
  if (open == std::string_view::npos || text.empty() || text.back() != ']') {
    throw ParseError("expected 'name[arg,...]', got '" + std::string(text) + "'");
  }
  const std::string_view name = Trim(text.substr(0, open));
  const CatalogEntry* entry = FindPredicate(name);
  if (entry == nullptr) {
    throw ParseError("unknown predicate '" + std::string(name) + "'");
  }

  std::vector<std::string_view> raw_args;
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  if (!Trim(body).empty()) {
    size_t start = 0;
    while (true) {
      size_t comma = body.find(',', start);
      raw_args.push_back(Trim(body.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }

  const size_t arity = static_cast<size_t>(entry->num_points + entry->num_numbers);
  if (raw_args.size() != arity) {
    throw ParseError("arity mismatch for " + std::string(entry->name) +
                     ": expected " + std::to_string(arity) + " arguments [" +
                     std::string(entry->point_params) +
                     (entry->num_numbers > 0 ? ",value" : "") + "], got " +
                     std::to_string(raw_args.size()));
  }

  PredicateStep step;
  step.predicate = std::string(entry->name);
  for (size_t i = 0; i < raw_args.size(); ++i) {
    const std::string_view arg = raw_args[i];
    const bool wants_point = i < static_cast<size_t>(entry->num_points);
    if (wants_point) {
      if (!IsIdentifier(arg)) {
        throw ParseError(std::string(entry->name) + ": argument " +
                         std::to_string(i + 1) + " must be a point, got '" +
                         std::string(arg) + "'");
      }
      step.args.emplace_back(std::string(arg));
    } else {
      const auto value = ParseNumber(arg);
      if (!value) {
        throw ParseError(std::string(entry->name) + ": argument " +
                         std::to_string(i + 1) +
                         " must be a decimal literal, got '" +
                         std::string(arg) + "'");
      }
      step.args.emplace_back(*value);
    }
  }
  CheckExpectedDomain(step);
  return step;
}

std::string SerializePredicate(const PredicateStep& step) {
  std::string out = step.predicate + "[";
  for (size_t i = 0; i < step.args.size(); ++i) {
    if (i > 0) out += ',';
    if (const auto* name = std::get_if<std::string>(&step.args[i])) {
      out += *name;
    } else {
      out += FormatNumber(std::get<double>(step.args[i]));
    }
  }
  out += "]";
  return out;
}

Skeleton ParseSkeleton(std::string_view text) {
  Skeleton skeleton;
  int line_no = 0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      PredicateStep step = ParsePredicate(line);
      step.index = static_cast<int>(skeleton.steps.size());
      skeleton.steps.push_back(std::move(step));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (skeleton.steps.empty()) throw ParseError("empty skeleton");
  return skeleton;
}

std::string SerializeSkeleton(const Skeleton& skeleton) {
  std::string out;
  for (const auto& step : skeleton.steps) out += SerializePredicate(step) + "\n";
  return out;
}

void CheckPointReferences(const Skeleton& skeleton,
                          std::span<const PointDecl> points) {
  std::set<std::string, std::less<>> declared;
  for (const auto& p : points) declared.insert(p.name);
  for (const auto& step : skeleton.steps) {
    for (const auto& name : step.PointArgs()) {
      if (!declared.contains(name)) {
        throw DataError("step " + std::to_string(step.index) + " (" +
                        SerializePredicate(step) +
                        ") references undeclared point '" + name + "'");
      }
    }
  }
}

}  // namespace goalcheck
