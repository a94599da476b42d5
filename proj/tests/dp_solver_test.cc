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

#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "fairpath/dp_solver.h"
#include "fairpath/error.h"
#include "fairpath/testkit.h"
#include "test_graphs.h"

namespace fairpath {
namespace {

using testing::MakeGraph;
using testing::PathGraph;

TEST(DpSolver, LayeredExactBounds) {
  const auto ex = testkit::LayeredExample();
  const auto r = SolveExactDistance(ex.graph, ex.source, ex.target,
                                    BoundsSpec::Create({5, 5}, {5, 5}));
  ASSERT_TRUE(r.yes);
  EXPECT_EQ(r.solver, "dp");
  EXPECT_EQ(r.counts, (ColorCounts{5, 5}));
  EXPECT_EQ(r.witness->length, 9u);
  EXPECT_TRUE(IsValidPath(ex.graph, *r.witness));
}

TEST(DpSolver, LayeredBalance) {
  const auto ex = testkit::LayeredExample();
  const auto r = SolveBalanceFair(ex.graph, ex.source, ex.target);
  ASSERT_TRUE(r.yes);
  EXPECT_EQ(r.counts, (ColorCounts{5, 5}));
  EXPECT_EQ(r.witness->vertices.front(), ex.source);
  EXPECT_EQ(r.witness->vertices.back(), ex.target);
}

// The full table at t of the layered example. Its 27 shortest paths split
// into blue/green counts (6,4) x6, (5,5) x13, (4,6) x7 and (3,7) x1.
TEST(DpSolver, LayeredTableAtTarget) {
  const auto ex = testkit::LayeredExample();
  const auto table = DpTable::Build(ex.graph, ex.source);
  std::set<ColorCounts> at_t;
  for (const auto& e : table.entries(ex.target)) at_t.insert(e.counts);
  std::set<ColorCounts> expected;
  for (const auto& p : testkit::EnumerateFairPaths(
           ex.graph, ex.source, ex.target, testkit::AcceptAll(), 18, 9)
           .paths) {
    expected.insert(CountColors(ex.graph, p));
  }
  EXPECT_EQ(at_t, expected);
  EXPECT_EQ(at_t, (std::set<ColorCounts>{{6, 4}, {5, 5}, {4, 6}, {3, 7}}));
}

TEST(DpSolver, AbsentColorIsNo) {
  const auto g = PathGraph({0, 0, 0}, 2);
  const auto r = SolveExactDistance(g, 0, 2, BoundsSpec::Create({0, 1}, {3, 3}));
  EXPECT_FALSE(r.yes);
  EXPECT_EQ(r.reason, "no-fair-shortest-path");
}

TEST(DpSolver, TwoVerticesSameColorNotBalanced) {
  const auto g = PathGraph({0, 0}, 2);
  EXPECT_FALSE(SolveBalanceFair(g, 0, 1).yes);
}

TEST(DpSolver, Unreachable) {
  const auto g = MakeGraph(3, 1, {{0, 1, 1}}, {0, 0, 0});
  const auto r = SolveBalanceFair(g, 0, 2);
  EXPECT_FALSE(r.yes);
  EXPECT_EQ(r.reason, "unreachable");
}

TEST(DpSolver, QueryErrors) {
  const auto g = PathGraph({0, 1}, 2);
  EXPECT_THROW(SolveBalanceFair(g, 0, 0), Error);
  EXPECT_THROW(SolveBalanceFair(g, 0, 7), Error);
  try {
    SolveExactDistance(g, 0, 1, BoundsSpec::Create({0}, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(DpSolver, OnlyShortestPathsCount) {
  // Direct arc 0->3 (length 2) beats the balanced detour 0->1->2->3 (3).
  const auto g = MakeGraph(4, 2, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 2}},
                           {0, 1, 0, 1});
  EXPECT_FALSE(SolveExactDistance(g, 0, 3, BoundsSpec::Create({2, 2}, {2, 2})).yes);
  EXPECT_TRUE(SolveBalanceFair(g, 0, 3).yes);  // counts (1,1)
}

// Table entries versus enumeration of shortest paths to every vertex.
TEST(DpSolver, TableMatchesEnumeration) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    testkit::GeneratorConfig config;
    config.seed = seed;
    config.n = 4 + static_cast<int>(seed % 7);
    config.c = 1 + static_cast<int>(seed % 3);
    config.density = 0.35;
    const auto inst = testkit::RandomInstance(config);
    const auto& g = inst.graph;
    const auto table = DpTable::Build(g, 0);
    const auto& dist = table.distances();
    for (VertexId v = 1; v < g.num_vertices(); ++v) {
      std::set<ColorCounts> expected;
      if (dist[v]) {
        const auto paths = testkit::EnumerateFairPaths(
            g, 0, v, testkit::AcceptAll(), g.num_vertices(), *dist[v]);
        for (const auto& p : paths.paths) {
          if (p.length == *dist[v]) expected.insert(CountColors(g, p));
        }
      }
      std::set<ColorCounts> got;
      const auto& entries = table.entries(v);
      for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
        got.insert(entries[i].counts);
        const Path p = table.Reconstruct(g, v, i);
        EXPECT_TRUE(IsValidPath(g, p));
        EXPECT_EQ(p.length, *dist[v]);
        EXPECT_EQ(CountColors(g, p), entries[i].counts);
      }
      EXPECT_EQ(got.size(), entries.size()) << "duplicate tuple";
      EXPECT_EQ(got, expected) << "seed " << seed << " vertex " << v;
    }
  }
}

TEST(DpSolver, AgreesWithOracleOnRandomBounds) {
  int yes = 0;
  for (std::uint64_t seed = 100; seed < 300; ++seed) {
    testkit::GeneratorConfig config;
    config.seed = seed;
    config.n = 5 + static_cast<int>(seed % 8);
    config.c = 2 + static_cast<int>(seed % 2);
    config.density = 0.3;
    const auto inst = testkit::RandomInstance(config);
    const auto& g = inst.graph;
    const VertexId t = inst.query.target;
    const auto dist = *DijkstraDistances(g, 0)[t];
    const BoundsSpec& spec = inst.query.spec;
    const auto oracle = testkit::OracleSolve(
        g, 0, t,
        testkit::ShortestOnly(g, 0, t, testkit::WithinBounds(BoundsSpec{
                                           spec.alphas, spec.betas, dist, {}})),
        g.num_vertices(), dist);
    const auto dp = SolveExactDistance(g, 0, t, spec);
    ASSERT_EQ(dp.yes, oracle.yes) << "seed " << seed;
    if (dp.yes) {
      ++yes;
      EXPECT_TRUE(IsValidPath(g, *dp.witness));
      EXPECT_EQ(dp.witness->length, dist);
      EXPECT_TRUE(SatisfiesBounds(dp.counts, spec));
    }
  }
  EXPECT_GT(yes, 20);
}

TEST(DpSolver, Deterministic) {
  testkit::GeneratorConfig config;
  config.seed = 5;
  config.n = 40;
  config.c = 3;
  config.density = 0.2;
  const auto inst = testkit::RandomInstance(config);
  const auto a = SolveOnShortestPaths(inst.graph, 0, 39,
                                      [](const ColorCounts&) { return true; });
  const auto b = SolveOnShortestPaths(inst.graph, 0, 39,
                                      [](const ColorCounts&) { return true; });
  ASSERT_TRUE(a.yes);
  EXPECT_EQ(a.witness, b.witness);
}

}  // namespace
}  // namespace fairpath
