// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRPATH_SOLVE_RESULT_H_
#define FAIRPATH_SOLVE_RESULT_H_

#include <optional>
#include <string>

#include "fairpath/graph.h"

namespace fairpath {

// Decision plus, on yes, a witness path with its length and color counts.
struct SolveResult {
  bool yes = false;
  // Short machine-readable tag for a no answer ("unreachable",
  // "infeasible-bounds", "no-path", ...). Empty on yes.
  std::string reason;
  std::optional<Path> witness;
  ColorCounts counts;
  std::string solver;

  static SolveResult No(std::string reason, std::string solver) {
    SolveResult r;
    r.reason = std::move(reason);
    r.solver = std::move(solver);
    return r;
  }
};

}  // namespace fairpath

#endif  // FAIRPATH_SOLVE_RESULT_H_
