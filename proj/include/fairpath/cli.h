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

#ifndef FAIRPATH_CLI_H_
#define FAIRPATH_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fairpath/constraints.h"
#include "fairpath/fpt_solver.h"
#include "fairpath/graph.h"
#include "fairpath/solve_result.h"

namespace fairpath::cli {

enum class SolverChoice { kAuto, kDp, kFpt, kOracle };

// One query against one instance. Vertex ids are 0-based here; the command
// line and the file formats use 1-based ids.
struct QuerySpec {
  VertexId source = 0;
  VertexId target = 0;
  std::optional<Length> ell;  // defaults to dist(source, target)
  FairnessVariant variant = BalanceVariant{};
  SolverChoice solver = SolverChoice::kAuto;
  double epsilon = 0.01;
  std::uint64_t seed = 0;
  // Inclusive range for the guessed parameter of the max-min, proportional
  // and margin-of-victory variants; defaults to everything a path within the
  // budget can realize.
  std::optional<std::pair<int, int>> guesses;
  Execution execution = Execution::kParallel;
};

// "balance", "maxmin:<slack>[:difference|quotient]", "proportional:<slack>",
// "mov:<slack>". Explicit bounds come from ParseBounds* instead. Throws
// kParse or kInvalidSlack.
FairnessVariant ParseVariant(const std::string& text);
SolverChoice ParseSolver(const std::string& text);
std::string SolverName(SolverChoice solver);

// Inline `i:alpha:beta` items (1-based colors); unlisted colors get [0, n].
BoundsSpec ParseInlineBounds(const std::vector<std::string>& items,
                             int num_colors, int num_vertices);
// `b <color> <alpha> <beta>` and optional `k <count>` lines, `c` comments.
BoundsSpec ParseBoundsFile(const std::string& text, int num_colors,
                           int num_vertices);

// The bound specs a variant expands to for a budget `ell`; the balance
// variant expands as max-min with zero slack.
std::vector<BoundsSpec> ExpandVariant(const ColoredDigraph& graph,
                                      const QuerySpec& query, Length ell);

// Solver actually used for `query` (resolves kAuto).
SolverChoice ResolveSolver(const ColoredDigraph& graph,
                           const QuerySpec& query);

// Dispatches the query. Throws kInvalidQuery for incompatible queries, e.g.
// the dp solver with a budget above dist(s,t). Every witness returned has
// been checked against the query.
SolveResult Solve(const ColoredDigraph& graph, const QuerySpec& query);

// Result lines: `result yes|no`; on yes `path`, `length`, `counts`; on no
// `reason`; then `meta solver=.. seed=.. epsilon=.. time_ms=..`.
std::string FormatResult(const SolveResult& result, const QuerySpec& query,
                         double millis);

// Entry point shared by the executable and the tests. Exit codes: 0 yes,
// 1 no, 2 error (also for generate on success: 0).
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace fairpath::cli

#endif  // FAIRPATH_CLI_H_
