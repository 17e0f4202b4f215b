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

// The predicate catalog: one table shared by the predicate parser (arity and
// argument kinds) and the sub-goal compiler (numeric form and expected
// value). A predicate is accepted by the parser iff it has a lowering rule.

#ifndef GOALCHECK_CATALOG_H_
#define GOALCHECK_CATALOG_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goalcheck/quantity_expr.h"

namespace goalcheck {

enum class CatalogGroup { kCore, kConstant, kTriangle, kQuadrilateral, kConstruction };

struct LoweredTarget {
  QuantityExpr expr;
  double expected;
};

struct CatalogEntry {
  std::string_view name;
  // Point parameter names, for documentation and error messages ("A,B,C,D").
  std::string_view point_params;
  int num_points;
  // Numeric literals follow the point arguments.
  int num_numbers;
  CatalogGroup group;
  std::string_view note;
  LoweredTarget (*lower)(const std::vector<std::string>& points,
                         const std::vector<double>& numbers);
};

std::span<const CatalogEntry> Catalog();

// nullptr when `name` is not a catalog predicate.
const CatalogEntry* FindPredicate(std::string_view name);

}  // namespace goalcheck

#endif  // GOALCHECK_CATALOG_H_
