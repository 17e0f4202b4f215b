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

#ifndef GOALCHECK_NUMERIC_TEXT_H_
#define GOALCHECK_NUMERIC_TEXT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace goalcheck {

// Shortest decimal text that parses back to exactly `value`.
std::string FormatNumber(double value);

// Strict decimal parse of the whole of `text`: optional sign, digits, optional
// fraction and exponent. Returns nullopt for anything else, including
// non-finite results.
std::optional<double> ParseNumber(std::string_view text);

std::string_view Trim(std::string_view text);

// Splits on '\n' and drops a trailing '\r' from each line.
std::vector<std::string_view> SplitLines(std::string_view text);

}  // namespace goalcheck

#endif  // GOALCHECK_NUMERIC_TEXT_H_
