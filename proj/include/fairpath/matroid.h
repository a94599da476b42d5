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

#ifndef FAIRPATH_MATROID_H_
#define FAIRPATH_MATROID_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fairpath/constraints.h"
#include "fairpath/field.h"
#include "fairpath/graph.h"

namespace fairpath {

// Matroid on the graph's vertices whose bases are exactly the k-sets meeting
// every per-color bound. X is independent iff |X ∩ chi^i| <= beta_i for all i
// and |X| + g(X) <= k, where g(X) = sum_i max(0, alpha_i - |X ∩ chi^i|) is
// the number of vertices still owed to unmet lower bounds.
class BoundsMatroid {
 public:
  // Throws kDimensionMismatch on inconsistent sizes or a color outside
  // [0, num_colors).
  BoundsMatroid(std::vector<ColorId> coloring, int num_colors,
                std::vector<int> alphas, std::vector<int> betas, int rank);
  BoundsMatroid(const ColoredDigraph& graph, const BoundsSpec& spec, int rank)
      : BoundsMatroid(graph.colors(), graph.num_colors(), spec.alphas,
                      spec.betas, rank) {}

  int ground_size() const { return static_cast<int>(coloring_.size()); }
  int num_colors() const { return num_colors_; }
  int rank_target() const { return rank_; }
  const std::vector<int>& alphas() const { return alphas_; }
  const std::vector<int>& betas() const { return betas_; }
  const std::vector<ColorId>& coloring() const { return coloring_; }
  const std::vector<int>& class_sizes() const { return class_sizes_; }

  // X must hold distinct ground elements.
  bool IsIndependent(std::span<const VertexId> x) const;
  int Deficit(std::span<const VertexId> x) const;  // g(X)

  // A basis of size rank_target() exists: sum alpha <= k, alpha_i <= |chi^i|
  // and sum_i min(beta_i, |chi^i|) >= k.
  bool HasBasis() const;

 private:
  std::vector<ColorId> coloring_;
  int num_colors_;
  std::vector<int> alphas_;
  std::vector<int> betas_;
  int rank_;
  std::vector<int> class_sizes_;
};

// Three-layer digraph realizing a BoundsMatroid as a gammoid. Node ids
// [0, num_sinks) are the ground vertices; the remaining ids hold the source
// groups S_i (alpha_i nodes each), the buffers U_i and the free sources S*.
// Arcs: S* -> U_i, S_i -> chi^i, U_i -> chi^i.
//
// |U_i| is min(beta_i, k) - alpha_i rather than beta_i - alpha_i. Both give
// the same matroid since no independent set exceeds k elements, and the cap
// keeps the graph O(c*k + n) nodes even when beta is unbounded.
struct GammoidGraph {
  int num_sinks = 0;
  int num_nodes = 0;
  std::vector<std::vector<int>> alpha_sources;  // S_i
  std::vector<std::vector<int>> buffers;        // U_i
  std::vector<int> free_sources;                // S*
  // S_1, ..., S_c, S*; this order fixes the matrix row order.
  std::vector<int> sources;
  std::vector<std::pair<int, int>> arcs;
};

// Throws kInfeasibleBounds when sum alpha exceeds k.
GammoidGraph BuildGammoid(const BoundsMatroid& matroid);

// |X| vertex-disjoint source-to-X paths exist (unit vertex capacities, max
// flow).
bool IsLinked(const GammoidGraph& gammoid, std::span<const VertexId> x);

// Per-set probability bound for a linked set to be represented as dependent:
// the relevant minor is a nonzero polynomial of degree <= 2|S| in the arc
// weights.
double RepresentationErrorBound(const GammoidGraph& gammoid);

// |S| x |V| matrix whose (s, v) entry sums, over all s->v paths, the product
// of independent uniformly random nonzero arc weights in F_p. Dependent sets
// always get dependent columns; a linked set gets independent columns with
// probability at least 1 - RepresentationErrorBound(). Throws
// kEpsilonOutOfRange unless epsilon lies in (0, 1) and is not below that
// bound.
FieldMatrix Represent(const GammoidGraph& gammoid, double epsilon,
                      std::uint64_t seed);

// Columns `x` are linearly independent over F_p.
bool ColumnsIndependent(const FieldMatrix& matrix,
                        std::span<const VertexId> x);

}  // namespace fairpath

#endif  // FAIRPATH_MATROID_H_
