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

#ifndef FAIRPATH_TESTKIT_H_
#define FAIRPATH_TESTKIT_H_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fairpath/constraints.h"
#include "fairpath/graph.h"
#include "fairpath/solve_result.h"

namespace fairpath::testkit {

// ---------------------------------------------------------------------------
// Brute-force path oracle.

using PathPredicate = std::function<bool(const Path&, const ColorCounts&)>;

struct EnumerationResult {
  std::vector<Path> paths;
  // The max_paths cap stopped the search; absence of a path is then not a
  // definitive no.
  bool truncated = false;
};

// Depth-first enumeration of every simple s-t path with at most
// `max_vertices` vertices and length at most `max_length`, filtered by
// `accept`. Paths are reported in DFS order (out-arcs in input order).
EnumerationResult EnumerateFairPaths(const ColoredDigraph& graph, VertexId s,
                                     VertexId t, const PathPredicate& accept,
                                     int max_vertices, Length max_length,
                                     size_t max_paths = 1'000'000);

PathPredicate AcceptAll();
PathPredicate BalanceFair();
PathPredicate WithinBounds(const BoundsSpec& spec);
// Restricts `inner` to shortest s-t paths.
PathPredicate ShortestOnly(const ColoredDigraph& graph, VertexId s, VertexId t,
                           PathPredicate inner);

// Decision by enumeration: yes with the first accepted path. Throws
// kCapExceeded when the path cap is hit before any path is accepted.
SolveResult OracleSolve(const ColoredDigraph& graph, VertexId s, VertexId t,
                        const PathPredicate& accept, int max_vertices,
                        Length max_length, size_t max_paths = 5'000'000);

// Number of s-t paths in a DAG by dynamic programming over a topological
// order. Throws kInvalidQuery if the graph has a cycle.
std::uint64_t CountDagPaths(const ColoredDigraph& graph, VertexId s,
                            VertexId t);

// ---------------------------------------------------------------------------
// Random instances.

enum class Tightness {
  kLoose,    // alpha = 0, beta = n
  kWitness,  // bounds pinned to the planted backbone's color counts
  kRandom,   // small random intervals
};

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int n = 10;
  int c = 2;
  double density = 0.2;  // probability of each extra ordered arc
  Length max_weight = 3;
  Tightness tightness = Tightness::kRandom;
};

struct Query {
  VertexId source = 0;
  VertexId target = 0;
  BoundsSpec spec;
};

struct Instance {
  ColoredDigraph graph;
  Query query;
  std::vector<VertexId> backbone;  // planted source-to-target path
};

// Vertex 0 is the source and n-1 the target; a random simple backbone path
// between them guarantees reachability. spec.ell is the backbone length.
Instance RandomInstance(const GeneratorConfig& config);

// ---------------------------------------------------------------------------
// Multicolored clique instances and the two hardness reductions.

// k-partite graph, partitions of equal size eta. Vertex id part * eta + index
// (0-based); edges join different partitions.
struct CliqueInstance {
  int k = 0;
  int eta = 0;
  std::vector<std::pair<int, int>> edges;

  int part(int v) const { return v / eta; }
  int index(int v) const { return v % eta; }
  int id(int part, int index) const { return part * eta + index; }
};

// Edge probability `density` between every cross-partition pair; with
// `plant` a random multicolored clique is added.
CliqueInstance RandomCliqueInstance(int k, int eta, double density,
                                    bool plant, std::uint64_t seed);

// The 3-partite example with four vertices per partition used to illustrate
// the compact reduction.
CliqueInstance ExampleCliqueInstance();

// Exhaustive search over one vertex per partition. Throws kCapExceeded when
// eta^k exceeds `cap`.
bool HasMulticoloredClique(const CliqueInstance& instance,
                           std::uint64_t cap = 10'000'000);

struct ReducedInstance {
  ColoredDigraph graph;
  VertexId source;
  VertexId target;
};

// Unary reduction: 2k(k-1)+1 colors, vertex-selection gadgets with a
// vertices of color r_{i,j} and eta-a of color rbar_{i,j}, edge gadgets in
// slots k+1.. by lexicographic partition pair, and a tail balancing the
// special color against eta occurrences of every other one; unit lengths.
// A balance-fair shortest path exists iff the clique exists. Throws
// kParameterTooSmall for k < 2.
ReducedInstance ReduceW1(const CliqueInstance& instance);

// Binary-encoded reduction with 2k+1 colors: vertex paths of
// (k-1) * sum_{l<=tau} k^(l-1) vertices, edge paths of 2 * sum k^(l-1),
// tau = ceil(log2 eta). Throws kParameterTooSmall unless k >= 3 and
// tau >= 2.
ReducedInstance ReduceEth(const CliqueInstance& instance);

// Levels used by ReduceEth (ceil(log2 eta), 0 for eta <= 1).
int EncodingLevels(int eta);

// `p mcc <k> <eta>` then `e <u> <v>` lines, 1-based ids, `c` comments.
CliqueInstance ParseClique(const std::string& text);
std::string SerializeClique(const CliqueInstance& instance);

// ---------------------------------------------------------------------------
// The two-color layered example graph: 18 vertices, unit lengths, source 0,
// target 17, distance 9, with a balance-fair shortest path of five vertices
// per color.
struct LayeredInstance {
  ColoredDigraph graph;
  VertexId source;
  VertexId target;
  Path highlighted;
};
LayeredInstance LayeredExample();

}  // namespace fairpath::testkit

#endif  // FAIRPATH_TESTKIT_H_
