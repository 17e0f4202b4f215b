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

#ifndef GOALCHECK_ERROR_H_
#define GOALCHECK_ERROR_H_

#include <stdexcept>
#include <string>

namespace goalcheck {

// Base of every error thrown by the library. The CLI maps all of these to the
// "data error" exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text: point blocks, predicate terms, skeletons, instance files,
// answer expressions. `line()` is 1-based, or 0 when not applicable.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A numeric evaluation that has no meaningful value: degenerate segment,
// zero-length denominator, missing point, sqrt of a negative number.
class EvalError : public Error {
 public:
  using Error::Error;
};

// Inconsistent or missing on-disk data (manifest, instance files).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace goalcheck

#endif  // GOALCHECK_ERROR_H_
