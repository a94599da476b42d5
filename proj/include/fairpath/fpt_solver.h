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

#ifndef FAIRPATH_FPT_SOLVER_H_
#define FAIRPATH_FPT_SOLVER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "fairpath/constraints.h"
#include "fairpath/field.h"
#include "fairpath/graph.h"
#include "fairpath/solve_result.h"

namespace fairpath {

enum class Execution {
  kSerial,    // reference order, one thread
  kParallel,  // OpenMP over the vertices of a level
};

struct FptOptions {
  double epsilon = 0.01;
  std::uint64_t seed = 0;
  Execution execution = Execution::kParallel;
  // Drop partial paths already longer than the budget before pruning. Such
  // sets can never complete to a solution, and every representative of a
  // kept set is at most as heavy, so answers are unchanged.
  bool prune_by_budget = true;
};

// Per-level representative families of path vertex sets. Cell (p, v) holds
// p-sets X, each with a weight and a predecessor in cell (p-1, u), such that
// following predecessors walks an s-v path on exactly X whose length is the
// stored weight.
class RepTable {
 public:
  struct Entry {
    std::vector<VertexId> set;  // sorted
    Length weight;
    VertexId pred_vertex;  // -1 for the base cell {s}
    int pred_entry;
    std::vector<field::Elem> wedge;
  };

  // Runs the level recurrence for vertex count k against the matroid
  // represented by `matrix` (k rows). Cell (1, s) = {{s}} with weight 0;
  // cell (p, v) is a min-(k-p)-representative of the extensions X + v of
  // cell (p-1, u) over arcs (u, v), v not in X, with independent columns.
  static RepTable Build(const ColoredDigraph& graph, VertexId s,
                        const FieldMatrix& matrix, int k,
                        std::optional<Length> budget, Execution execution);

  int k() const { return k_; }
  VertexId source() const { return source_; }
  const std::vector<Entry>& cell(int p, VertexId v) const {
    return cells_[p][v];
  }

  // Throws kCorruptTable if the predecessor chain is broken.
  Path Reconstruct(int p, VertexId v, int index) const;

 private:
  int k_ = 0;
  VertexId source_ = -1;
  // cells_[p][v], p in [1, k]; cells_[0] unused.
  std::vector<std::vector<std::vector<Entry>>> cells_;
};

// Candidate path vertex counts: max(2, sum alpha) up to
// min(ell + 1, sum_i min(beta_i, |chi^i|), n), or just spec.k when pinned.
std::vector<int> FptVertexCounts(const ColoredDigraph& graph,
                                 const BoundsSpec& spec);

// Randomized decision for an s-t path of length <= spec.ell meeting the
// bounds. Never reports a false yes; misses a yes-instance with probability
// at most options.epsilon. Throws kEpsilonOutOfRange, kDimensionMismatch and
// kInvalidQuery.
SolveResult FptSolve(const ColoredDigraph& graph, VertexId s, VertexId t,
                     const BoundsSpec& spec, const FptOptions& options = {});

// Seed used for the representation at vertex count k.
std::uint64_t FptRepresentationSeed(std::uint64_t seed, int k);

}  // namespace fairpath

#endif  // FAIRPATH_FPT_SOLVER_H_
