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

#include "fairpath/matroid.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "fairpath/error.h"

namespace fairpath {

BoundsMatroid::BoundsMatroid(std::vector<ColorId> coloring, int num_colors,
                             std::vector<int> alphas, std::vector<int> betas,
                             int rank)
    : coloring_(std::move(coloring)),
      num_colors_(num_colors),
      alphas_(std::move(alphas)),
      betas_(std::move(betas)),
      rank_(rank) {
  if (static_cast<int>(alphas_.size()) != num_colors_ ||
      static_cast<int>(betas_.size()) != num_colors_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "bounds do not match the color count");
  }
  if (rank_ < 0) {
    throw Error(ErrorCode::kDimensionMismatch, "negative rank target");
  }
  class_sizes_.assign(num_colors_, 0);
  for (ColorId c : coloring_) {
    if (c < 0 || c >= num_colors_) {
      throw Error(ErrorCode::kDimensionMismatch, "color out of range");
    }
    ++class_sizes_[c];
  }
}

int BoundsMatroid::Deficit(std::span<const VertexId> x) const {
  std::vector<int> per_color(num_colors_, 0);
  for (VertexId v : x) ++per_color[coloring_[v]];
  int g = 0;
  for (int i = 0; i < num_colors_; ++i) {
    g += std::max(0, alphas_[i] - per_color[i]);
  }
  return g;
}

bool BoundsMatroid::IsIndependent(std::span<const VertexId> x) const {
  std::vector<int> per_color(num_colors_, 0);
  for (VertexId v : x) ++per_color[coloring_[v]];
  long long g = 0;
  for (int i = 0; i < num_colors_; ++i) {
    if (per_color[i] > betas_[i]) return false;
    g += std::max(0, alphas_[i] - per_color[i]);
  }
  return static_cast<long long>(x.size()) + g <= rank_;
}

bool BoundsMatroid::HasBasis() const {
  long long alpha_sum = 0, capacity = 0;
  for (int i = 0; i < num_colors_; ++i) {
    if (alphas_[i] > class_sizes_[i] || alphas_[i] > betas_[i]) return false;
    alpha_sum += alphas_[i];
    capacity += std::min(betas_[i], class_sizes_[i]);
  }
  return alpha_sum <= rank_ && capacity >= rank_;
}

GammoidGraph BuildGammoid(const BoundsMatroid& matroid) {
  const int k = matroid.rank_target();
  const int c = matroid.num_colors();
  const auto& alphas = matroid.alphas();
  const auto& betas = matroid.betas();
  const int alpha_sum = std::accumulate(alphas.begin(), alphas.end(), 0);
  if (alpha_sum > k) {
    throw Error(ErrorCode::kInfeasibleBounds,
                "sum of lower bounds " + std::to_string(alpha_sum) +
                    " exceeds rank " + std::to_string(k));
  }
  GammoidGraph g;
  g.num_sinks = matroid.ground_size();
  int next = g.num_sinks;
  g.alpha_sources.resize(c);
  g.buffers.resize(c);
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < alphas[i]; ++j) g.alpha_sources[i].push_back(next++);
  }
  for (int i = 0; i < c; ++i) {
    const int size = std::max(0, std::min(betas[i], k) - alphas[i]);
    for (int j = 0; j < size; ++j) g.buffers[i].push_back(next++);
  }
  for (int j = 0; j < k - alpha_sum; ++j) g.free_sources.push_back(next++);
  g.num_nodes = next;
  for (int i = 0; i < c; ++i) {
    g.sources.insert(g.sources.end(), g.alpha_sources[i].begin(),
                     g.alpha_sources[i].end());
  }
  g.sources.insert(g.sources.end(), g.free_sources.begin(),
                   g.free_sources.end());

  std::vector<std::vector<VertexId>> members(c);
  for (VertexId v = 0; v < g.num_sinks; ++v) {
    members[matroid.coloring()[v]].push_back(v);
  }
  for (int i = 0; i < c; ++i) {
    for (int s : g.free_sources) {
      for (int u : g.buffers[i]) g.arcs.emplace_back(s, u);
    }
    for (int s : g.alpha_sources[i]) {
      for (VertexId v : members[i]) g.arcs.emplace_back(s, v);
    }
    for (int u : g.buffers[i]) {
      for (VertexId v : members[i]) g.arcs.emplace_back(u, v);
    }
  }
  return g;
}

namespace {

// Edmonds-Karp on unit capacities; small networks only.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(int n) : head_(n, -1) {}

  void AddArc(int from, int to) {
    edges_.push_back({to, head_[from], 1});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  int MaxFlow(int source, int sink, int limit) {
    int flow = 0;
    const int n = static_cast<int>(head_.size());
    std::vector<int> via(n);
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(source);
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        const int x = queue.front();
        queue.pop();
        for (int e = head_[x]; e != -1; e = edges_[e].next) {
          if (edges_[e].cap > 0 && via[edges_[e].to] == -1) {
            via[edges_[e].to] = e;
            queue.push(edges_[e].to);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int x = sink; x != source; x = edges_[via[x] ^ 1].to) {
        --edges_[via[x]].cap;
        ++edges_[via[x] ^ 1].cap;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Edge {
    int to;
    int next;
    int cap;
  };
  std::vector<int> head_;
  std::vector<Edge> edges_;
};

}  // namespace

bool IsLinked(const GammoidGraph& gammoid, std::span<const VertexId> x) {
  if (x.size() > gammoid.sources.size()) return false;
  if (x.empty()) return true;
  // Node a splits into in = 2a, out = 2a + 1.
  const int super_source = 2 * gammoid.num_nodes;
  const int super_sink = super_source + 1;
  UnitFlowNetwork net(super_sink + 1);
  for (int a = 0; a < gammoid.num_nodes; ++a) net.AddArc(2 * a, 2 * a + 1);
  for (auto [from, to] : gammoid.arcs) net.AddArc(2 * from + 1, 2 * to);
  for (int s : gammoid.sources) net.AddArc(super_source, 2 * s);
  for (VertexId v : x) net.AddArc(2 * v + 1, super_sink);
  const int need = static_cast<int>(x.size());
  return net.MaxFlow(super_source, super_sink, need) == need;
}

double RepresentationErrorBound(const GammoidGraph& gammoid) {
  return 2.0 * static_cast<double>(std::max<size_t>(gammoid.sources.size(), 1)) /
         static_cast<double>(field::kModulus);
}

FieldMatrix Represent(const GammoidGraph& gammoid, double epsilon,
                      std::uint64_t seed) {
  if (!(epsilon > 0.0 && epsilon < 1.0) ||
      epsilon < RepresentationErrorBound(gammoid)) {
    throw Error(ErrorCode::kEpsilonOutOfRange,
                "epsilon must lie in [" +
                    std::to_string(RepresentationErrorBound(gammoid)) +
                    ", 1)");
  }
  const CounterRng rng(seed);
  const int nodes = gammoid.num_nodes;
  std::vector<std::vector<std::pair<int, field::Elem>>> out(nodes);
  std::vector<int> indegree(nodes, 0);
  for (size_t i = 0; i < gammoid.arcs.size(); ++i) {
    auto [from, to] = gammoid.arcs[i];
    out[from].emplace_back(to, rng.NonzeroElem(/*stream=*/1, i));
    ++indegree[to];
  }
  std::vector<int> order;
  order.reserve(nodes);
  for (int a = 0; a < nodes; ++a) {
    if (indegree[a] == 0) order.push_back(a);
  }
  for (size_t i = 0; i < order.size(); ++i) {
    for (auto [to, w] : out[order[i]]) {
      if (--indegree[to] == 0) order.push_back(to);
    }
  }

  const int rows = static_cast<int>(gammoid.sources.size());
  FieldMatrix matrix(rows, gammoid.num_sinks);
  matrix.seed = seed;
  matrix.epsilon = epsilon;
  std::vector<field::Elem> value(nodes);
  for (int r = 0; r < rows; ++r) {
    std::fill(value.begin(), value.end(), 0);
    value[gammoid.sources[r]] = 1;
    for (int a : order) {
      if (value[a] == 0) continue;
      for (auto [to, w] : out[a]) {
        value[to] = field::Add(value[to], field::Mul(value[a], w));
      }
    }
    for (int v = 0; v < gammoid.num_sinks; ++v) matrix.at(r, v) = value[v];
  }
  return matrix;
}

bool ColumnsIndependent(const FieldMatrix& matrix,
                        std::span<const VertexId> x) {
  if (static_cast<int>(x.size()) > matrix.rows()) return false;
  return ColumnRank(matrix, x) == static_cast<int>(x.size());
}

}  // namespace fairpath
