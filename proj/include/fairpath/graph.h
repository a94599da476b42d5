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

#ifndef FAIRPATH_GRAPH_H_
#define FAIRPATH_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fairpath {

// Vertices and colors are 0-based in memory. The text formats and the CLI use
// 1-based ids; conversion happens only at the I/O boundary.
using VertexId = std::int32_t;
using ColorId = std::int32_t;
using Length = std::uint64_t;

struct Arc {
  VertexId tail;
  VertexId head;
  Length length;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directed graph with positive integer arc lengths and a total vertex
// coloring. Immutable after construction.
class ColoredDigraph {
 public:
  // Validates and builds in/out adjacency. Throws Error with
  // kZeroOrNegativeLength, kColorOutOfRange or kDanglingVertexId.
  static ColoredDigraph Build(int num_vertices, int num_colors,
                              std::vector<Arc> arcs,
                              std::vector<ColorId> colors);

  int num_vertices() const { return static_cast<int>(colors_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  int num_colors() const { return num_colors_; }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int index) const { return arcs_[index]; }
  ColorId color(VertexId v) const { return colors_[v]; }
  const std::vector<ColorId>& colors() const { return colors_; }

  // Arc indices, in input order.
  std::span<const int> out_arcs(VertexId v) const {
    return {out_index_.data() + out_begin_[v],
            out_index_.data() + out_begin_[v + 1]};
  }
  std::span<const int> in_arcs(VertexId v) const {
    return {in_index_.data() + in_begin_[v],
            in_index_.data() + in_begin_[v + 1]};
  }

  // Number of vertices of each color (|chi^i|).
  const std::vector<int>& color_class_sizes() const { return class_sizes_; }

  // Length of the shortest arc u->v, if any.
  std::optional<Length> min_arc_length(VertexId u, VertexId v) const;

  bool is_vertex(VertexId v) const { return v >= 0 && v < num_vertices(); }

 private:
  ColoredDigraph() = default;

  int num_colors_ = 0;
  std::vector<Arc> arcs_;
  std::vector<ColorId> colors_;
  std::vector<int> class_sizes_;
  std::vector<int> out_begin_, out_index_;
  std::vector<int> in_begin_, in_index_;
};

// Simple path as an ordered vertex sequence plus its length.
struct Path {
  std::vector<VertexId> vertices;
  Length length = 0;

  friend bool operator==(const Path&, const Path&) = default;
};

// counts[i] = number of path vertices of color i.
using ColorCounts = std::vector<int>;

// Distances from a single source; nullopt marks unreachable vertices.
using Distances = std::vector<std::optional<Length>>;

// Dijkstra from `source`. Throws kOverflow if a distance sum would wrap.
Distances DijkstraDistances(const ColoredDigraph& graph, VertexId source);

// Indices of the arcs (u,v) with dist(s,v) = dist(s,u) + w(u,v), both ends
// reachable. Every shortest path from `source` uses only these arcs.
std::vector<int> ShortestDagArcs(const ColoredDigraph& graph,
                                 const Distances& dist);
std::vector<int> ShortestDagArcs(const ColoredDigraph& graph, VertexId source);

ColorCounts CountColors(const ColoredDigraph& graph,
                        std::span<const VertexId> vertices);
inline ColorCounts CountColors(const ColoredDigraph& graph, const Path& path) {
  return CountColors(graph, path.vertices);
}

// Sum of the shortest parallel arc between consecutive vertices, or nullopt
// if some consecutive pair is not joined by an arc.
std::optional<Length> WalkLength(const ColoredDigraph& graph,
                                 std::span<const VertexId> vertices);

// Distinct vertices, consecutive arcs exist, stored length matches the walk.
bool IsValidPath(const ColoredDigraph& graph, const Path& path);

// Overflow-checked addition of lengths.
Length CheckedAdd(Length a, Length b);

}  // namespace fairpath

#endif  // FAIRPATH_GRAPH_H_
