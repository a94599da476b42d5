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

#ifndef FAIRPATH_DP_SOLVER_H_
#define FAIRPATH_DP_SOLVER_H_

#include <functional>
#include <unordered_map>
#include <vector>

#include "fairpath/constraints.h"
#include "fairpath/graph.h"
#include "fairpath/solve_result.h"

namespace fairpath {

struct CountsHash {
  size_t operator()(const ColorCounts& counts) const;
};

// Exact-distance table over the shortest-path DAG from a source: for every
// vertex v, the set of color-count vectors realized by some shortest s-v
// path. Each entry keeps one predecessor (first writer wins) so a witness can
// be rebuilt.
class DpTable {
 public:
  struct Entry {
    ColorCounts counts;
    VertexId pred_vertex;  // -1 at the source
    int pred_entry;        // index into the predecessor's entries
  };

  // Processes reachable vertices by nondecreasing distance, ties by id,
  // extending only along shortest-path-DAG arcs.
  static DpTable Build(const ColoredDigraph& graph, VertexId source);

  VertexId source() const { return source_; }
  const Distances& distances() const { return dist_; }
  const std::vector<Entry>& entries(VertexId v) const { return entries_[v]; }
  size_t total_entries() const;

  // Rebuilds the shortest path ending at `v` with entries(v)[index].
  Path Reconstruct(const ColoredDigraph& graph, VertexId v, int index) const;

 private:
  VertexId source_ = -1;
  Distances dist_;
  std::vector<std::vector<Entry>> entries_;
};

// Decides whether some shortest s-t path satisfies `spec` (spec.ell is not
// consulted: the budget is dist(s,t)). Throws kDimensionMismatch and
// kInvalidQuery (s == t or a non-vertex endpoint).
SolveResult SolveExactDistance(const ColoredDigraph& graph, VertexId s,
                               VertexId t, const BoundsSpec& spec);

// Decides whether some shortest s-t path is balance-fair.
SolveResult SolveBalanceFair(const ColoredDigraph& graph, VertexId s,
                             VertexId t);

// Shared core: first entry at t (insertion order) accepted by `accept`.
SolveResult SolveOnShortestPaths(
    const ColoredDigraph& graph, VertexId s, VertexId t,
    const std::function<bool(const ColorCounts&)>& accept);

}  // namespace fairpath

#endif  // FAIRPATH_DP_SOLVER_H_
