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

#include "fairpath/fpt_solver.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "fairpath/error.h"
#include "fairpath/matroid.h"
#include "fairpath/repfam.h"

namespace fairpath {
namespace {

struct Candidate {
  std::vector<VertexId> set;
  Length weight;
  VertexId pred_vertex;
  int pred_entry;
};

// Builds cell (p, v) from level p - 1.
std::vector<RepTable::Entry> ComputeCell(
    const ColoredDigraph& graph, const FieldMatrix& matrix,
    const std::vector<std::vector<RepTable::Entry>>& prev, int p, int k,
    VertexId v, std::optional<Length> budget) {
  std::vector<Candidate> candidates;
  std::map<std::vector<VertexId>, int> index;
  for (int arc_idx : graph.in_arcs(v)) {
    const Arc& arc = graph.arc(arc_idx);
    const auto& from = prev[arc.tail];
    for (int e = 0; e < static_cast<int>(from.size()); ++e) {
      const auto& x = from[e].set;
      if (std::binary_search(x.begin(), x.end(), v)) continue;
      const Length weight = CheckedAdd(from[e].weight, arc.length);
      if (budget && weight > *budget) continue;
      std::vector<VertexId> joined;
      joined.reserve(x.size() + 1);
      auto pos = std::lower_bound(x.begin(), x.end(), v);
      joined.insert(joined.end(), x.begin(), pos);
      joined.push_back(v);
      joined.insert(joined.end(), pos, x.end());
      auto [it, inserted] =
          index.try_emplace(joined, static_cast<int>(candidates.size()));
      if (inserted) {
        candidates.push_back({std::move(joined), weight, arc.tail, e});
      } else if (weight < candidates[it->second].weight) {
        candidates[it->second].weight = weight;
        candidates[it->second].pred_vertex = arc.tail;
        candidates[it->second].pred_entry = e;
      }
    }
  }

  // Independence in the represented matroid is a nonzero wedge vector.
  std::vector<std::vector<field::Elem>> wedges;
  std::vector<Length> weights;
  std::vector<int> alive;
  for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
    const auto& c = candidates[i];
    auto wedge = ExtendWedge(prev[c.pred_vertex][c.pred_entry].wedge, p - 1,
                             matrix.column(v));
    if (std::all_of(wedge.begin(), wedge.end(),
                    [](field::Elem x) { return x == 0; })) {
      continue;
    }
    wedges.push_back(std::move(wedge));
    weights.push_back(c.weight);
    alive.push_back(i);
  }
  const auto kept = SelectRepresentatives(
      wedges, weights, static_cast<int>(Binomial(k, p)));
  std::vector<RepTable::Entry> cell;
  cell.reserve(kept.size());
  for (int j : kept) {
    auto& c = candidates[alive[j]];
    cell.push_back({std::move(c.set), c.weight, c.pred_vertex, c.pred_entry,
                    std::move(wedges[j])});
  }
  return cell;
}

}  // namespace

RepTable RepTable::Build(const ColoredDigraph& graph, VertexId s,
                         const FieldMatrix& matrix, int k,
                         std::optional<Length> budget, Execution execution) {
  if (matrix.rows() != k || matrix.cols() != graph.num_vertices()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "representation must be k x n");
  }
  const int n = graph.num_vertices();
  RepTable table;
  table.k_ = k;
  table.source_ = s;
  table.cells_.assign(k + 1, std::vector<std::vector<Entry>>(n));
  if (k < 1) return table;
  {
    auto col = matrix.column(s);
    table.cells_[1][s].push_back(
        {{s}, 0, -1, -1, std::vector<field::Elem>(col.begin(), col.end())});
  }
  const bool parallel = execution == Execution::kParallel;
  for (int p = 2; p <= k; ++p) {
    const auto& prev = table.cells_[p - 1];
    auto& level = table.cells_[p];
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (VertexId v = 0; v < n; ++v) {
      level[v] = ComputeCell(graph, matrix, prev, p, k, v, budget);
    }
  }
  return table;
}

Path RepTable::Reconstruct(int p, VertexId v, int index) const {
  Path path;
  int level = p;
  VertexId cur = v;
  int cur_index = index;
  Length weight = 0;
  bool first = true;
  while (cur != -1) {
    if (level < 1 || cur_index < 0 ||
        cur_index >= static_cast<int>(cells_[level][cur].size())) {
      throw Error(ErrorCode::kCorruptTable, "broken predecessor chain");
    }
    const Entry& e = cells_[level][cur][cur_index];
    if (first) {
      weight = e.weight;
      first = false;
    }
    path.vertices.push_back(cur);
    cur = e.pred_vertex;
    cur_index = e.pred_entry;
    --level;
  }
  if (level != 0 || path.vertices.back() != source_) {
    throw Error(ErrorCode::kCorruptTable, "chain does not end at the source");
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  path.length = weight;
  return path;
}

std::vector<int> FptVertexCounts(const ColoredDigraph& graph,
                                 const BoundsSpec& spec) {
  long long capacity = 0;
  for (int i = 0; i < graph.num_colors(); ++i) {
    capacity += std::min(spec.betas[i], graph.color_class_sizes()[i]);
  }
  const long long by_length =
      spec.ell >= static_cast<Length>(std::numeric_limits<int>::max())
          ? std::numeric_limits<int>::max()
          : static_cast<long long>(spec.ell) + 1;
  long long lo = std::max(2, spec.alpha_sum());
  long long hi = std::min({by_length, capacity,
                           static_cast<long long>(graph.num_vertices())});
  if (spec.k) {
    lo = std::max<long long>(lo, *spec.k);
    hi = std::min<long long>(hi, *spec.k);
  }
  std::vector<int> counts;
  for (long long k = lo; k <= hi; ++k) counts.push_back(static_cast<int>(k));
  return counts;
}

std::uint64_t FptRepresentationSeed(std::uint64_t seed, int k) {
  return CounterRng(seed).Bits(/*stream=*/0x667074, static_cast<std::uint64_t>(k));
}

SolveResult FptSolve(const ColoredDigraph& graph, VertexId s, VertexId t,
                     const BoundsSpec& spec, const FptOptions& options) {
  if (!(options.epsilon > 0.0 && options.epsilon < 1.0)) {
    throw Error(ErrorCode::kEpsilonOutOfRange, "epsilon must lie in (0, 1)");
  }
  if (!graph.is_vertex(s) || !graph.is_vertex(t)) {
    throw Error(ErrorCode::kInvalidQuery, "endpoint is not a vertex");
  }
  if (s == t) {
    throw Error(ErrorCode::kInvalidQuery, "source and target must differ");
  }
  if (spec.num_colors() != graph.num_colors()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "bounds cover " + std::to_string(spec.num_colors()) +
                    " colors, graph has " +
                    std::to_string(graph.num_colors()));
  }
  spec.Validate();
  const auto counts = FptVertexCounts(graph, spec);
  if (counts.empty()) return SolveResult::No("infeasible-bounds", "fpt");
  // Union bound over the vertex-count guesses.
  const double eps = options.epsilon / static_cast<double>(counts.size());
  const std::optional<Length> budget =
      options.prune_by_budget ? std::optional<Length>(spec.ell) : std::nullopt;
  for (int k : counts) {
    const BoundsMatroid matroid(graph, spec, k);
    if (!matroid.HasBasis()) continue;
    const GammoidGraph gammoid = BuildGammoid(matroid);
    const FieldMatrix matrix =
        Represent(gammoid, eps, FptRepresentationSeed(options.seed, k));
    const RepTable table =
        RepTable::Build(graph, s, matrix, k, budget, options.execution);
    const auto& at_t = table.cell(k, t);
    for (int i = 0; i < static_cast<int>(at_t.size()); ++i) {
      if (at_t[i].weight > spec.ell) continue;
      Path path = table.Reconstruct(k, t, i);
      SolveResult result;
      result.counts = CountColors(graph, path);
      if (!IsValidPath(graph, path) || !SatisfiesBounds(result.counts, spec)) {
        throw Error(ErrorCode::kCorruptTable, "witness fails verification");
      }
      result.yes = true;
      result.solver = "fpt";
      result.witness = std::move(path);
      return result;
    }
  }
  return SolveResult::No("no-path-found", "fpt");
}

}  // namespace fairpath
