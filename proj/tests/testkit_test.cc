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

#include "fairpath/dp_solver.h"
#include "fairpath/error.h"
#include "fairpath/graph_io.h"
#include "fairpath/testkit.h"
#include "test_graphs.h"

namespace fairpath::testkit {
namespace {

using fairpath::testing::MakeGraph;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kParse;
}

// Color sequences of the chains leaving hub `from`, in arc order; each chain
// runs through non-hub vertices until it meets the next hub.
std::vector<std::vector<ColorId>> Chains(const ColoredDigraph& g, VertexId from,
                                         int num_hubs) {
  std::vector<std::vector<ColorId>> out;
  for (int idx : g.out_arcs(from)) {
    std::vector<ColorId> seq;
    VertexId v = g.arc(idx).head;
    while (v >= num_hubs) {
      seq.push_back(g.color(v));
      v = g.arc(g.out_arcs(v)[0]).head;
    }
    out.push_back(seq);
  }
  return out;
}

std::vector<ColorId> Runs(std::initializer_list<std::pair<ColorId, int>> runs) {
  std::vector<ColorId> out;
  for (auto [c, n] : runs) out.insert(out.end(), n, c);
  return out;
}

TEST(Enumerate, LayeredPaths) {
  const auto ex = LayeredExample();
  const auto all = EnumerateFairPaths(ex.graph, ex.source, ex.target,
                                      AcceptAll(), 18, 100);
  EXPECT_EQ(all.paths.size(), 27u);
  EXPECT_FALSE(all.truncated);
  EXPECT_EQ(CountDagPaths(ex.graph, ex.source, ex.target), 27u);
  const auto fair = EnumerateFairPaths(ex.graph, ex.source, ex.target,
                                       BalanceFair(), 18, 100);
  EXPECT_EQ(fair.paths.size(), 13u);
  const auto capped = EnumerateFairPaths(ex.graph, ex.source, ex.target,
                                         AcceptAll(), 18, 100, 5);
  EXPECT_EQ(capped.paths.size(), 5u);
  EXPECT_TRUE(capped.truncated);
}

TEST(Enumerate, LimitsAndSimplePaths) {
  // Cycle 0 <-> 1 plus 1 -> 2; parallel arcs 0 -> 2.
  const auto g = MakeGraph(3, 1, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {0, 2, 5},
                                  {0, 2, 4}},
                           {0, 0, 0});
  const auto all = EnumerateFairPaths(g, 0, 2, AcceptAll(), 3, 100);
  ASSERT_EQ(all.paths.size(), 2u);
  EXPECT_EQ(all.paths[0].vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(all.paths[1].length, 4u);
  EXPECT_EQ(EnumerateFairPaths(g, 0, 2, AcceptAll(), 2, 100).paths.size(), 1u);
  EXPECT_EQ(EnumerateFairPaths(g, 0, 2, AcceptAll(), 3, 3).paths.size(), 1u);
  EXPECT_EQ(CodeOf([&] { CountDagPaths(g, 0, 2); }), ErrorCode::kInvalidQuery);
}

TEST(OracleSolve, DecisionsAndCap) {
  const auto ex = LayeredExample();
  const auto yes = OracleSolve(ex.graph, ex.source, ex.target,
                               BalanceFair(), 18, 9);
  ASSERT_TRUE(yes.yes);
  EXPECT_EQ(yes.counts, (ColorCounts{5, 5}));
  const auto no = OracleSolve(ex.graph, ex.source, ex.target,
                              WithinBounds(BoundsSpec::Create({7, 0}, {9, 9}, 9)),
                              18, 9);
  EXPECT_FALSE(no.yes);
  EXPECT_EQ(no.reason, "no-path");
  EXPECT_EQ(CodeOf([&] {
              OracleSolve(ex.graph, ex.source, ex.target,
                          [](const Path&, const ColorCounts&) { return false; },
                          18, 9, 10);
            }),
            ErrorCode::kCapExceeded);
  const auto g = MakeGraph(2, 1, {}, {0, 0});
  EXPECT_EQ(OracleSolve(g, 0, 1, AcceptAll(), 2, 5).reason, "unreachable");
}

TEST(RandomInstance, DeterministicUnderSeed) {
  GeneratorConfig config;
  config.seed = 7;
  config.n = 12;
  const auto a = RandomInstance(config);
  const auto b = RandomInstance(config);
  EXPECT_EQ(SerializeGraph(a.graph), SerializeGraph(b.graph));
  EXPECT_EQ(a.query.spec, b.query.spec);
  config.seed = 8;
  EXPECT_NE(SerializeGraph(RandomInstance(config).graph), SerializeGraph(a.graph));
}

TEST(RandomInstance, DensityZeroIsTheBackbone) {
  GeneratorConfig config;
  config.seed = 3;
  config.n = 9;
  config.density = 0.0;
  const auto inst = RandomInstance(config);
  EXPECT_EQ(inst.graph.num_arcs(), static_cast<int>(inst.backbone.size()) - 1);
  EXPECT_EQ(inst.backbone.front(), 0);
  EXPECT_EQ(inst.backbone.back(), 8);
  EXPECT_EQ(*WalkLength(inst.graph, inst.backbone), inst.query.spec.ell);
}

TEST(RandomInstance, WitnessProfileIsYes) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GeneratorConfig config;
    config.seed = seed;
    config.n = 9;
    config.c = 3;
    config.tightness = Tightness::kWitness;
    const auto inst = RandomInstance(config);
    const auto counts = CountColors(inst.graph, inst.backbone);
    EXPECT_EQ(inst.query.spec.alphas, counts);
    EXPECT_EQ(inst.query.spec.betas, counts);
    EXPECT_TRUE(OracleSolve(inst.graph, 0, 8, WithinBounds(inst.query.spec), 9,
                            inst.query.spec.ell)
                    .yes);
  }
}

TEST(Clique, ExampleInstance) {
  const auto inst = ExampleCliqueInstance();
  EXPECT_EQ(inst.k, 3);
  EXPECT_EQ(inst.eta, 4);
  EXPECT_EQ(inst.edges.size(), 13u);
  EXPECT_TRUE(HasMulticoloredClique(inst));
  // The only triangle is v_3^1, v_2^2, v_2^3; dropping one of its edges
  // leaves none.
  auto broken = inst;
  std::erase(broken.edges, std::pair<int, int>{inst.id(0, 3), inst.id(1, 2)});
  EXPECT_EQ(broken.edges.size(), 12u);
  EXPECT_FALSE(HasMulticoloredClique(broken));
}

TEST(Clique, CapAndValidation) {
  const auto big = RandomCliqueInstance(6, 20, 0.1, false, 1);
  EXPECT_EQ(CodeOf([&] { HasMulticoloredClique(big, 1000); }),
            ErrorCode::kCapExceeded);
  CliqueInstance bad{2, 2, {{0, 1}}};
  EXPECT_THROW(ReduceW1(bad), Error);
}

TEST(Clique, PlantedCliqueIsFound) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    EXPECT_TRUE(HasMulticoloredClique(RandomCliqueInstance(4, 5, 0.1, true, seed)));
  }
}

TEST(Clique, FormatRoundTrip) {
  const auto inst = ExampleCliqueInstance();
  const std::string text = SerializeClique(inst);
  EXPECT_EQ(text.substr(0, 12), "p mcc 3 4\ne ");
  const auto back = ParseClique(text);
  EXPECT_EQ(back.k, 3);
  EXPECT_EQ(back.eta, 4);
  EXPECT_EQ(back.edges, inst.edges);
  EXPECT_EQ(CodeOf([] { ParseClique("e 1 2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([] { ParseClique("p mcc 2 2\ne 1 9\n"); }), ErrorCode::kParse);
}

TEST(ReduceW1, ShapeOfTheExample) {
  const auto r = ReduceW1(ExampleCliqueInstance());
  EXPECT_EQ(r.graph.num_colors(), 13);
  EXPECT_EQ(r.source, 0);
  for (const Arc& a : r.graph.arcs()) EXPECT_EQ(a.length, 1u);
  // Selection path for v_1^1 (a = 2 in 1-based numbering): colors
  // r_{1,2}, rbar_{1,2}, r_{1,3}, rbar_{1,3} are 0, 1, 2, 3.
  const auto chains = Chains(r.graph, 0, 7);
  ASSERT_EQ(chains.size(), 4u);
  EXPECT_EQ(chains[1], Runs({{0, 2}, {1, 2}, {2, 2}, {3, 2}}));
  // First verification path of pair (1,2): edge v_0^1 v_1^2, colors
  // r_{1,2}=0, rbar_{1,2}=1, r_{2,1}=4, rbar_{2,1}=5.
  const auto pair = Chains(r.graph, 3, 7);
  ASSERT_EQ(pair.size(), 4u);
  EXPECT_EQ(pair[0], Runs({{0, 3}, {1, 1}, {4, 2}, {5, 2}}));
}

TEST(ReduceW1, EveryPathCarriesKSpecialVertices) {
  const auto clique = RandomCliqueInstance(3, 2, 0.7, false, 5);
  const auto r = ReduceW1(clique);
  const int big_k = 7;
  const auto paths = EnumerateFairPaths(r.graph, r.source, big_k - 1,
                                        AcceptAll(), r.graph.num_vertices(),
                                        std::numeric_limits<Length>::max());
  ASSERT_FALSE(paths.paths.empty());
  for (const auto& p : paths.paths) {
    EXPECT_EQ(CountColors(r.graph, p)[12], big_k);
  }
}

TEST(ReduceW1, TailCases) {
  // eta = K = 4 for k = 2: no tail, the last hub is the target.
  const auto even = ReduceW1(RandomCliqueInstance(2, 4, 0.5, true, 1));
  EXPECT_EQ(even.target, 3);
  // eta = 9 > K = 7: eta - K special vertices after the last hub.
  const auto longer = ReduceW1(RandomCliqueInstance(3, 9, 0.3, true, 1));
  const auto d = DijkstraDistances(longer.graph, 6);
  EXPECT_EQ(*d[longer.target], 2u);
  EXPECT_EQ(longer.graph.color(longer.target), 12);
  EXPECT_EQ(CodeOf([] { ReduceW1(CliqueInstance{1, 3, {}}); }),
            ErrorCode::kParameterTooSmall);
}

TEST(ReduceW1, EquivalentToClique) {
  int yes = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int eta = 2 + static_cast<int>(seed % 3);
    const auto clique = RandomCliqueInstance(3, eta, 0.4, seed % 4 == 0, seed);
    const auto r = ReduceW1(clique);
    const bool expected = HasMulticoloredClique(clique);
    yes += expected;
    const auto got = SolveBalanceFair(r.graph, r.source, r.target);
    EXPECT_EQ(got.yes, expected) << "seed " << seed;
  }
  EXPECT_GT(yes, 5);
  EXPECT_LT(yes, 30);
}

TEST(ReduceEth, ChainSequences) {
  const auto r = ReduceEth(ExampleCliqueInstance());
  EXPECT_EQ(r.graph.num_colors(), 7);
  EXPECT_EQ(r.graph.num_vertices(), 208);
  // Selection paths have k^tau - 1 = 8 vertices. v_1^1: r_1 x6, rbar_1 x2.
  const auto chains = Chains(r.graph, 0, 7);
  ASSERT_EQ(chains.size(), 4u);
  for (const auto& c : chains) EXPECT_EQ(c.size(), 8u);
  EXPECT_EQ(chains[1], Runs({{0, 6}, {1, 2}}));
  EXPECT_EQ(chains[0], Runs({{0, 6}, {0, 2}}));
  EXPECT_EQ(chains[3], Runs({{1, 6}, {1, 2}}));
  // Edge v_0^1 v_1^2: rbar_1 x4, rbar_2 x3, r_2 x1.
  const auto pair = Chains(r.graph, 3, 7);
  ASSERT_EQ(pair.size(), 4u);
  EXPECT_EQ(pair[0], Runs({{1, 4}, {3, 3}, {2, 1}}));
  for (const auto& c : pair) EXPECT_EQ(c.size(), 8u);
  // Head path of (k-1) * 4 - 7 = 1 vertex before u_1.
  EXPECT_NE(r.source, 0);
  EXPECT_EQ(*DijkstraDistances(r.graph, r.source)[0], 1u);
  EXPECT_EQ(r.target, 6);
}

TEST(ReduceEth, Levels) {
  EXPECT_EQ(EncodingLevels(1), 0);
  EXPECT_EQ(EncodingLevels(2), 1);
  EXPECT_EQ(EncodingLevels(3), 2);
  EXPECT_EQ(EncodingLevels(4), 2);
  EXPECT_EQ(EncodingLevels(5), 3);
  EXPECT_EQ(CodeOf([] { ReduceEth(RandomCliqueInstance(2, 4, 0.5, true, 1)); }),
            ErrorCode::kParameterTooSmall);
  EXPECT_EQ(CodeOf([] { ReduceEth(RandomCliqueInstance(3, 2, 0.5, true, 1)); }),
            ErrorCode::kParameterTooSmall);
}

TEST(ReduceEth, EquivalentToClique) {
  int yes = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const int eta = 3 + static_cast<int>(seed % 3);  // 3..5
    const auto clique = RandomCliqueInstance(3, eta, 0.35, seed % 3 == 0, seed);
    const auto r = ReduceEth(clique);
    const bool expected = HasMulticoloredClique(clique);
    yes += expected;
    EXPECT_EQ(SolveBalanceFair(r.graph, r.source, r.target).yes, expected)
        << "seed " << seed;
  }
  EXPECT_GT(yes, 2);
}

TEST(LayeredExample, Instance) {
  const auto ex = LayeredExample();
  EXPECT_EQ(ex.graph.num_vertices(), 18);
  EXPECT_EQ(ex.graph.num_arcs(), 25);
  EXPECT_EQ(ex.source, 0);
  EXPECT_EQ(ex.target, 17);
  EXPECT_TRUE(IsValidPath(ex.graph, ex.highlighted));
  EXPECT_TRUE(IsBalanceFair(CountColors(ex.graph, ex.highlighted)));
}

}  // namespace
}  // namespace fairpath::testkit
