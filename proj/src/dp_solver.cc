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

#include "fairpath/dp_solver.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "fairpath/error.h"

namespace fairpath {

size_t CountsHash::operator()(const ColorCounts& counts) const {
  size_t h = 0xcbf29ce484222325ULL;
  for (int x : counts) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

DpTable DpTable::Build(const ColoredDigraph& graph, VertexId source) {
  DpTable table;
  table.source_ = source;
  table.dist_ = DijkstraDistances(graph, source);
  const int n = graph.num_vertices();
  table.entries_.assign(n, {});

  std::vector<char> in_dag(graph.num_arcs(), 0);
  for (int idx : ShortestDagArcs(graph, table.dist_)) in_dag[idx] = 1;

  std::vector<VertexId> order;
  for (VertexId v = 0; v < n; ++v) {
    if (table.dist_[v]) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return std::tie(*table.dist_[a], a) < std::tie(*table.dist_[b], b);
  });

  ColorCounts start(graph.num_colors(), 0);
  start[graph.color(source)] = 1;
  table.entries_[source].push_back({std::move(start), -1, -1});

  std::unordered_map<ColorCounts, int, CountsHash> index;
  for (VertexId v : order) {
    if (v == source) continue;
    index.clear();
    auto& out = table.entries_[v];
    const ColorId color = graph.color(v);
    for (int arc_idx : graph.in_arcs(v)) {
      if (!in_dag[arc_idx]) continue;
      const VertexId u = graph.arc(arc_idx).tail;
      const auto& from = table.entries_[u];
      for (int e = 0; e < static_cast<int>(from.size()); ++e) {
        ColorCounts counts = from[e].counts;
        ++counts[color];
        auto [it, inserted] =
            index.try_emplace(counts, static_cast<int>(out.size()));
        if (inserted) out.push_back({std::move(counts), u, e});
      }
    }
  }
  return table;
}

size_t DpTable::total_entries() const {
  size_t total = 0;
  for (const auto& e : entries_) total += e.size();
  return total;
}

Path DpTable::Reconstruct(const ColoredDigraph& graph, VertexId v,
                          int index) const {
  Path path;
  VertexId cur = v;
  int cur_index = index;
  while (cur != -1) {
    if (cur_index < 0 ||
        cur_index >= static_cast<int>(entries_[cur].size()) ||
        path.vertices.size() > static_cast<size_t>(graph.num_vertices())) {
      throw Error(ErrorCode::kCorruptTable, "broken predecessor chain");
    }
    path.vertices.push_back(cur);
    const Entry& e = entries_[cur][cur_index];
    cur = e.pred_vertex;
    cur_index = e.pred_entry;
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  path.length = *dist_[v];
  return path;
}

SolveResult SolveOnShortestPaths(
    const ColoredDigraph& graph, VertexId s, VertexId t,
    const std::function<bool(const ColorCounts&)>& accept) {
  if (!graph.is_vertex(s) || !graph.is_vertex(t)) {
    throw Error(ErrorCode::kInvalidQuery, "endpoint is not a vertex");
  }
  if (s == t) {
    throw Error(ErrorCode::kInvalidQuery, "source and target must differ");
  }
  const DpTable table = DpTable::Build(graph, s);
  if (!table.distances()[t]) return SolveResult::No("unreachable", "dp");
  const auto& at_t = table.entries(t);
  for (int i = 0; i < static_cast<int>(at_t.size()); ++i) {
    if (!accept(at_t[i].counts)) continue;
    SolveResult result;
    result.yes = true;
    result.solver = "dp";
    result.witness = table.Reconstruct(graph, t, i);
    result.counts = at_t[i].counts;
    return result;
  }
  return SolveResult::No("no-fair-shortest-path", "dp");
}

SolveResult SolveExactDistance(const ColoredDigraph& graph, VertexId s,
                               VertexId t, const BoundsSpec& spec) {
  if (spec.num_colors() != graph.num_colors()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "bounds cover " + std::to_string(spec.num_colors()) +
                    " colors, graph has " +
                    std::to_string(graph.num_colors()));
  }
  return SolveOnShortestPaths(graph, s, t, [&](const ColorCounts& counts) {
    return SatisfiesBounds(counts, spec);
  });
}

SolveResult SolveBalanceFair(const ColoredDigraph& graph, VertexId s,
                             VertexId t) {
  return SolveOnShortestPaths(graph, s, t, IsBalanceFair);
}

}  // namespace fairpath
