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

#include "fairpath/graph.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>

#include "fairpath/error.h"

namespace fairpath {

ColoredDigraph ColoredDigraph::Build(int num_vertices, int num_colors,
                                     std::vector<Arc> arcs,
                                     std::vector<ColorId> colors) {
  if (num_vertices < 0 || num_colors < 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "need n >= 0 and at least one color");
  }
  if (static_cast<int>(colors.size()) != num_vertices) {
    throw Error(ErrorCode::kDanglingVertexId,
                "coloring covers " + std::to_string(colors.size()) +
                    " vertices, expected " + std::to_string(num_vertices));
  }
  ColoredDigraph g;
  g.num_colors_ = num_colors;
  g.class_sizes_.assign(num_colors, 0);
  for (int v = 0; v < num_vertices; ++v) {
    if (colors[v] < 0 || colors[v] >= num_colors) {
      throw Error(ErrorCode::kColorOutOfRange,
                  "vertex " + std::to_string(v + 1) + " has color " +
                      std::to_string(colors[v] + 1) + " outside [1.." +
                      std::to_string(num_colors) + "]");
    }
    ++g.class_sizes_[colors[v]];
  }
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= num_vertices || a.head < 0 ||
        a.head >= num_vertices) {
      throw Error(ErrorCode::kDanglingVertexId,
                  "arc endpoint outside [1.." + std::to_string(num_vertices) +
                      "]");
    }
    if (a.length == 0) {
      throw Error(ErrorCode::kZeroOrNegativeLength,
                  "arc " + std::to_string(a.tail + 1) + "->" +
                      std::to_string(a.head + 1) + " has length 0");
    }
  }
  g.colors_ = std::move(colors);
  g.arcs_ = std::move(arcs);

  // CSR adjacency, stable in arc input order.
  const int m = g.num_arcs();
  g.out_begin_.assign(num_vertices + 1, 0);
  g.in_begin_.assign(num_vertices + 1, 0);
  for (const Arc& a : g.arcs_) {
    ++g.out_begin_[a.tail + 1];
    ++g.in_begin_[a.head + 1];
  }
  for (int v = 0; v < num_vertices; ++v) {
    g.out_begin_[v + 1] += g.out_begin_[v];
    g.in_begin_[v + 1] += g.in_begin_[v];
  }
  g.out_index_.resize(m);
  g.in_index_.resize(m);
  std::vector<int> out_fill(g.out_begin_.begin(), g.out_begin_.end() - 1);
  std::vector<int> in_fill(g.in_begin_.begin(), g.in_begin_.end() - 1);
  for (int i = 0; i < m; ++i) {
    g.out_index_[out_fill[g.arcs_[i].tail]++] = i;
    g.in_index_[in_fill[g.arcs_[i].head]++] = i;
  }
  return g;
}

std::optional<Length> ColoredDigraph::min_arc_length(VertexId u,
                                                     VertexId v) const {
  std::optional<Length> best;
  for (int idx : out_arcs(u)) {
    const Arc& a = arcs_[idx];
    if (a.head == v && (!best || a.length < *best)) best = a.length;
  }
  return best;
}

Length CheckedAdd(Length a, Length b) {
  if (a > std::numeric_limits<Length>::max() - b) {
    throw Error(ErrorCode::kOverflow, "path length overflows 64 bits");
  }
  return a + b;
}

Distances DijkstraDistances(const ColoredDigraph& graph, VertexId source) {
  Distances dist(graph.num_vertices());
  if (!graph.is_vertex(source)) {
    throw Error(ErrorCode::kDanglingVertexId, "source is not a vertex");
  }
  using Item = std::pair<Length, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  std::vector<char> done(graph.num_vertices(), 0);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (int idx : graph.out_arcs(u)) {
      const Arc& a = graph.arc(idx);
      const Length nd = CheckedAdd(d, a.length);
      if (!dist[a.head] || nd < *dist[a.head]) {
        dist[a.head] = nd;
        heap.emplace(nd, a.head);
      }
    }
  }
  return dist;
}

std::vector<int> ShortestDagArcs(const ColoredDigraph& graph,
                                 const Distances& dist) {
  std::vector<int> kept;
  for (int i = 0; i < graph.num_arcs(); ++i) {
    const Arc& a = graph.arc(i);
    if (!dist[a.tail] || !dist[a.head]) continue;
    // dist[tail] + length cannot overflow past dist[head] when equal, but the
    // sum itself may exceed the range for non-DAG arcs.
    if (*dist[a.tail] <= std::numeric_limits<Length>::max() - a.length &&
        *dist[a.tail] + a.length == *dist[a.head]) {
      kept.push_back(i);
    }
  }
  return kept;
}

std::vector<int> ShortestDagArcs(const ColoredDigraph& graph,
                                 VertexId source) {
  return ShortestDagArcs(graph, DijkstraDistances(graph, source));
}

ColorCounts CountColors(const ColoredDigraph& graph,
                        std::span<const VertexId> vertices) {
  ColorCounts counts(graph.num_colors(), 0);
  for (VertexId v : vertices) ++counts[graph.color(v)];
  return counts;
}

std::optional<Length> WalkLength(const ColoredDigraph& graph,
                                 std::span<const VertexId> vertices) {
  Length total = 0;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto w = graph.min_arc_length(vertices[i], vertices[i + 1]);
    if (!w) return std::nullopt;
    total = CheckedAdd(total, *w);
  }
  return total;
}

bool IsValidPath(const ColoredDigraph& graph, const Path& path) {
  if (path.vertices.empty()) return false;
  std::unordered_set<VertexId> seen;
  for (VertexId v : path.vertices) {
    if (!graph.is_vertex(v) || !seen.insert(v).second) return false;
  }
  auto len = WalkLength(graph, path.vertices);
  return len && *len == path.length;
}

}  // namespace fairpath
