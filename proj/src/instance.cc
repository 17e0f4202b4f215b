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

#include "goalcheck/instance.h"

#include <array>
#include <cstdio>

#include "goalcheck/error.h"
#include "goalcheck/numeric_text.h"

namespace goalcheck {
namespace {

constexpr std::array<std::string_view, 7> kSections = {
    "id", "points", "premise", "skeleton", "subgoals", "diagram", "prompt"};

void ReplaceAll(std::string& text, std::string_view key, std::string_view value) {
  for (size_t pos = text.find(key); pos != std::string::npos;
       pos = text.find(key, pos + value.size())) {
    text.replace(pos, key.size(), value);
  }
}

std::string Fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  std::string s = buf;
  return s == "-0.0000" ? "0.0000" : s;
}

void AppendSection(std::string& out, std::string_view name, std::string_view body) {
  out += "[";
  out += name;
  out += "]\n";
  out += body;
  if (!body.empty() && body.back() != '\n') out += '\n';
}

// Returns the index of `line` in kSections, or -1.
int SectionIndex(std::string_view line) {
  if (line.size() < 3 || line.front() != '[' || line.back() != ']') return -1;
  const std::string_view name = line.substr(1, line.size() - 2);
  for (size_t i = 0; i < kSections.size(); ++i) {
    if (kSections[i] == name) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::string PremiseText(const std::vector<PointDecl>& points) {
  std::string out = "Points (x, y):";
  for (const auto& p : points) {
    out += "\n  " + p.name + " = (" + Fixed4(p.at.x) + ", " + Fixed4(p.at.y) + ")";
  }
  return out;
}

std::string PromptText(std::string_view premise, const std::vector<SubGoal>& goals) {
  std::string list;
  std::string example;
  for (size_t i = 0; i < goals.size(); ++i) {
    if (i > 0) {
      list += '\n';
      example += ", ";
    }
    list += "T_" + std::to_string(i) + " = " + goals[i].expr.Display() + "   (" +
            std::string(KindName(goals[i].kind)) + ")";
    example += "x" + std::to_string(i);
  }
  std::string out(PromptTemplate());
  ReplaceAll(out, "{{premise}}", premise);
  ReplaceAll(out, "{{count}}", std::to_string(goals.size()));
  ReplaceAll(out, "{{subgoals}}", list);
  ReplaceAll(out, "{{example}}", example);
  return out;
}

InstanceFile BuildInstance(std::string id, std::vector<PointDecl> points,
                           Skeleton skeleton, double tol) {
  if (id.empty() || id.find_first_of(" \t\r\n") != std::string::npos) {
    throw DataError("instance id must be a single non-empty word");
  }
  CheckPointReferences(skeleton, points);
  for (size_t i = 0; i < skeleton.steps.size(); ++i) {
    skeleton.steps[i].index = static_cast<int>(i);
  }
  InstanceFile inst;
  inst.id = std::move(id);
  inst.subgoals = CompileSkeleton(skeleton);
  const PointMap map(points);
  for (const auto& goal : inst.subgoals) {
    bool holds = false;
    try {
      holds = CheckSatisfaction(goal, map, tol);
    } catch (const EvalError& e) {
      throw DataError(goal.Label() + " cannot be evaluated: " + e.what());
    }
    if (!holds) {
      throw DataError(goal.Label() + " does not hold for the given coordinates");
    }
  }
  inst.premise = PremiseText(points);
  inst.prompt = PromptText(inst.premise, inst.subgoals);
  inst.points = std::move(points);
  inst.skeleton = std::move(skeleton);
  return inst;
}

InstanceFile GenerateInstance(std::string id, uint64_t seed, const ProblemShape& shape) {
  SampledProblem problem = SampleProblem(seed, shape);
  return BuildInstance(std::move(id), std::move(problem.points), std::move(problem.skeleton));
}

std::string SerializeInstance(const InstanceFile& instance) {
  std::string out;
  AppendSection(out, "id", instance.id);
  AppendSection(out, "points", SerializePoints(instance.points));
  AppendSection(out, "premise", instance.premise);
  AppendSection(out, "skeleton", SerializeSkeleton(instance.skeleton));
  AppendSection(out, "subgoals", SerializeSubGoals(instance.subgoals));
  if (instance.diagram) AppendSection(out, "diagram", *instance.diagram);
  out += "[prompt]\n";
  out += instance.prompt;
  return out;
}

InstanceFile ParseInstance(std::string_view text) {
  std::array<std::optional<std::string>, kSections.size()> bodies;
  constexpr int kPrompt = static_cast<int>(kSections.size()) - 1;
  int current = -1;
  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    const bool last = end == std::string_view::npos;
    if (last) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = last ? text.size() : end + 1;

    const int section = SectionIndex(line);
    if (section >= 0) {
      if (section <= current) {
        throw ParseError("section [" + std::string(kSections[section]) + "] out of order",
                         line_no);
      }
      current = section;
      bodies[section] = "";
      if (section == kPrompt) {
        bodies[section] = std::string(text.substr(pos));
        break;
      }
      continue;
    }
    if (current < 0) {
      if (Trim(line).empty()) continue;
      throw ParseError("text before the first section", line_no);
    }
    std::string& body = *bodies[current];
    if (!body.empty()) body += '\n';
    body += line;
  }

  for (int required : {0, 1, 2, 3, 4, kPrompt}) {
    if (!bodies[required]) {
      throw ParseError("missing section [" + std::string(kSections[required]) + "]");
    }
  }

  InstanceFile inst;
  inst.id = std::string(Trim(*bodies[0]));
  if (inst.id.empty()) throw ParseError("empty instance id");
  inst.points = ParsePoints(*bodies[1]);
  // Serialization appends a newline to a non-empty premise; the body joins
  // lines without it, so trailing blank lines are all that is lost.
  inst.premise = *bodies[2];
  while (!inst.premise.empty() && inst.premise.back() == '\n') inst.premise.pop_back();
  inst.skeleton = ParseSkeleton(*bodies[3]);
  inst.subgoals = ParseSubGoals(*bodies[4]);
  if (bodies[5]) {
    const std::string path(Trim(*bodies[5]));
    if (!path.empty()) inst.diagram = path;
  }
  inst.prompt = *bodies[kPrompt];

  CheckPointReferences(inst.skeleton, inst.points);
  if (inst.subgoals != CompileSkeleton(inst.skeleton)) {
    throw DataError("instance '" + inst.id + "': stored sub-goals differ from the compiled skeleton");
  }
  return inst;
}

std::vector<std::string> GroundTruthAnswers(const InstanceFile& instance) {
  std::vector<std::string> out;
  out.reserve(instance.subgoals.size());
  for (const auto& goal : instance.subgoals) out.push_back(FormatNumber(goal.expected));
  return out;
}

}  // namespace goalcheck
