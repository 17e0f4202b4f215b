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

#ifndef GOALCHECK_SVG_H_
#define GOALCHECK_SVG_H_

#include <string>

#include "goalcheck/instance.h"

namespace goalcheck {

// Diagram of an instance: every point labeled, every segment referenced by a
// sub-goal drawn once, and the circles implied by circle predicates
// (on_circle, lc_tangent, on_dia, cyclic). The view box is the padded
// bounding box with y pointing up. Output is a pure function of the input.
std::string RenderSvg(const InstanceFile& instance);

}  // namespace goalcheck

#endif  // GOALCHECK_SVG_H_
