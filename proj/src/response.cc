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

#include "goalcheck/response.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "goalcheck/error.h"
#include "goalcheck/numeric_text.h"

namespace goalcheck {
namespace {

constexpr std::string_view kAnswerOpen = "<answer>";
constexpr std::string_view kAnswerClose = "</answer>";
constexpr std::string_view kThinkOpen = "<think>";
constexpr std::string_view kThinkClose = "</think>";

// Splits on `,` (and newlines when asked) outside parentheses and braces.
std::vector<std::string_view> SplitTopLevel(std::string_view text,
                                            bool split_newlines) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    const bool end = i == text.size();
    const char c = end ? '\0' : text[i];
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') depth = std::max(0, depth - 1);
    if (end || (depth == 0 && (c == ',' || (split_newlines && c == '\n')))) {
      out.push_back(Trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// Recognizes "T3 = v", "T_3: v" and returns the slot index and value text.
std::optional<std::pair<size_t, std::string_view>> SlotLabel(std::string_view line) {
  line = Trim(line);
  if (line.empty() || line.front() != 'T') return std::nullopt;
  size_t i = 1;
  if (i < line.size() && line[i] == '_') ++i;
  const size_t digits_start = i;
  while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
  if (i == digits_start) return std::nullopt;
  const std::string_view digits = line.substr(digits_start, i - digits_start);
  size_t index = 0;
  if (std::from_chars(digits.data(), digits.data() + digits.size(), index).ec != std::errc()) {
    index = std::numeric_limits<size_t>::max();
  }
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  if (i >= line.size() || (line[i] != '=' && line[i] != ':')) return std::nullopt;
  return std::make_pair(index, Trim(line.substr(i + 1)));
}

std::string_view StripLabel(std::string_view item) {
  if (auto labeled = SlotLabel(item)) return labeled->second;
  return item;
}

// Labeled slots at or beyond n_expected are surplus and dropped here, which
// also bounds memory for hostile labels such as "T99999999999 = 1".
std::vector<std::optional<std::string>> ParseAnswerBlock(std::string_view body,
                                                         size_t n_expected,
                                                         size_t& raw_count) {
  body = Trim(body);
  std::vector<std::optional<std::string>> slots;
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
    const std::string_view inner = body.substr(1, body.size() - 2);
    if (!Trim(inner).empty()) {
      for (std::string_view item : SplitTopLevel(inner, false)) {
        slots.emplace_back(std::string(StripLabel(item)));
      }
    }
    raw_count = slots.size();
    return slots;
  }

  bool labeled_lines = false;
  raw_count = 0;
  for (std::string_view line : SplitLines(body)) {
    if (auto labeled = SlotLabel(line)) {
      labeled_lines = true;
      ++raw_count;
      if (labeled->first >= n_expected) continue;
      if (labeled->first >= slots.size()) slots.resize(labeled->first + 1);
      slots[labeled->first] = std::string(labeled->second);
    }
  }
  if (labeled_lines) return slots;

  for (std::string_view item : SplitTopLevel(body, true)) {
    if (!item.empty()) slots.emplace_back(std::string(item));
  }
  raw_count = slots.size();
  return slots;
}

}  // namespace

StructuredResponse ParseResponse(std::string_view text, size_t n_expected,
                                 const ResponseOptions& options) {
  StructuredResponse response;

  const size_t think_open = text.find(kThinkOpen);
  if (think_open != std::string_view::npos) {
    const size_t body = think_open + kThinkOpen.size();
    const size_t think_close = text.find(kThinkClose, body);
    if (think_close != std::string_view::npos) {
      response.think = std::string(Trim(text.substr(body, think_close - body)));
    }
  }

  // Models revise; the last complete block is the committed answer.
  const size_t close = text.rfind(kAnswerClose);
  size_t open = std::string_view::npos;
  if (close != std::string_view::npos) open = text.substr(0, close).rfind(kAnswerOpen);

  if (open == std::string_view::npos) {
    if (options.strict) throw ParseError("response has no <answer> block");
    response.answers.assign(n_expected, std::nullopt);
    return response;
  }

  response.has_answer_block = true;
  const size_t body = open + kAnswerOpen.size();
  response.answers = ParseAnswerBlock(text.substr(body, close - body), n_expected,
                                      response.raw_count);
  response.answers.resize(n_expected);
  return response;
}

std::string EmitResponse(std::span<const std::string> answers, std::string_view think) {
  std::string out = "<think>" + std::string(think) + "</think>\n<answer>[";
  for (size_t i = 0; i < answers.size(); ++i) {
    if (i > 0) out += ", ";
    out += answers[i];
  }
  out += "]</answer>\n";
  return out;
}

std::string EmitLineResponse(std::span<const std::string> answers,
                             std::string_view think) {
  std::string out = "<think>" + std::string(think) + "</think>\n<answer>\n";
  for (size_t i = 0; i < answers.size(); ++i) {
    out += "T" + std::to_string(i) + " = " + answers[i] + "\n";
  }
  out += "</answer>\n";
  return out;
}

InstanceScore InstanceScore::FromVerdicts(std::vector<bool> verdicts) {
  if (verdicts.empty()) throw Error("instance has no sub-goals");
  InstanceScore s;
  const auto correct = std::count(verdicts.begin(), verdicts.end(), true);
  s.p = static_cast<double>(correct) / static_cast<double>(verdicts.size());
  s.c = correct == static_cast<long>(verdicts.size()) ? 1 : 0;
  s.fa = verdicts.back() ? 1 : 0;
  s.per_goal = std::move(verdicts);
  return s;
}

InstanceScore ScoreInstance(const StructuredResponse& response,
                            std::span<const SubGoal> goals,
                            const EquivalenceConfig& cfg) {
  std::vector<bool> verdicts(goals.size(), false);
  for (size_t t = 0; t < goals.size(); ++t) {
    if (t < response.answers.size() && response.answers[t]) {
      verdicts[t] = Verify(*response.answers[t], goals[t], cfg);
    }
  }
  return InstanceScore::FromVerdicts(std::move(verdicts));
}

DatasetMetrics Aggregate(std::span<const InstanceScore> scores) {
  if (scores.empty()) throw Error("cannot aggregate an empty score list");
  // Summing the sorted fractions makes SR bit-identical under any instance
  // order.
  std::vector<double> ps;
  ps.reserve(scores.size());
  long complete = 0;
  long final_ok = 0;
  for (const auto& s : scores) {
    ps.push_back(s.p);
    complete += s.c;
    final_ok += s.fa;
  }
  std::sort(ps.begin(), ps.end());
  const double n = static_cast<double>(scores.size());
  DatasetMetrics m;
  m.n_instances = scores.size();
  m.sr = 100.0 * std::accumulate(ps.begin(), ps.end(), 0.0) / n;
  m.sc = 100.0 * static_cast<double>(complete) / n;
  m.fa = 100.0 * static_cast<double>(final_ok) / n;
  m.cr = m.sr > 0.0 ? 100.0 * m.sc / m.sr : 0.0;
  return m;
}

}  // namespace goalcheck
