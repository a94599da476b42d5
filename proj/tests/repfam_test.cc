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

#include <algorithm>

#include "fairpath/error.h"
#include "fairpath/field.h"
#include "fairpath/matroid.h"
#include "fairpath/repfam.h"

namespace fairpath {
namespace {

using field::Elem;

FieldMatrix RandomMatrix(int rows, int cols, std::uint64_t seed) {
  const CounterRng rng(seed);
  FieldMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) m.at(r, c) = rng.Elem(0, c * 64 + r);
  }
  m.seed = seed;
  return m;
}

// A represented bounds matroid on n vertices with rank k; dependencies come
// from the color bounds.
FieldMatrix MatroidMatrix(int n, int k, std::uint64_t seed) {
  const CounterRng rng(seed);
  std::vector<ColorId> coloring;
  for (int v = 0; v < n; ++v) coloring.push_back(rng.Bits(1, v) % 3);
  const int b = std::max(1, k / 2);
  const BoundsMatroid m(coloring, 3, {0, 0, 0}, {b, b, k}, k);
  return Represent(BuildGammoid(m), 0.01, seed);
}

WeightedFamily RandomFamily(const FieldMatrix& m, int p, int count,
                            std::uint64_t seed) {
  const CounterRng rng(seed);
  WeightedFamily family;
  std::uint64_t ctr = 0;
  for (int tries = 0; tries < 50 * count && family.size() < count; ++tries) {
    std::vector<VertexId> set;
    while (static_cast<int>(set.size()) < p) {
      const VertexId v = rng.Bits(2, ctr++) % m.cols();
      if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
    }
    std::sort(set.begin(), set.end());
    if (std::find(family.sets.begin(), family.sets.end(), set) !=
        family.sets.end()) {
      continue;
    }
    if (!ColumnsIndependent(m, set)) continue;
    family.sets.push_back(set);
    family.weights.push_back(rng.Bits(3, ctr++) % 10);
  }
  return family;
}

TEST(Binomial, Values) {
  EXPECT_EQ(Binomial(8, 4), 70u);
  EXPECT_EQ(Binomial(5, 0), 1u);
  EXPECT_EQ(Binomial(3, 5), 0u);
  EXPECT_EQ(Binomial(30, 15), 155117520u);
}

TEST(WedgeVector, FullDeterminant) {
  const FieldMatrix m = RandomMatrix(3, 3, 1);
  std::vector<Elem> rows(9);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) rows[r * 3 + c] = m.at(r, c);
  }
  const std::vector<VertexId> all{0, 1, 2};
  const auto w = WedgeVector(m, all);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0], Determinant(rows, 3));
}

TEST(WedgeVector, SingleColumnAndZeroColumn) {
  FieldMatrix m = RandomMatrix(4, 3, 2);
  const auto w = WedgeVector(m, std::vector<VertexId>{1});
  EXPECT_EQ(w, std::vector<Elem>(m.column(1).begin(), m.column(1).end()));
  for (int r = 0; r < 4; ++r) m.at(r, 2) = 0;
  const auto z = WedgeVector(m, std::vector<VertexId>{0, 2});
  EXPECT_EQ(z.size(), 6u);
  EXPECT_TRUE(std::all_of(z.begin(), z.end(), [](Elem e) { return e == 0; }));
  try {
    WedgeVector(RandomMatrix(2, 3, 1), std::vector<VertexId>{0, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeMismatch);
  }
}

// Minors in lexicographic row-subset order, checked against direct 2x2
// determinants.
TEST(WedgeVector, LexicographicMinors) {
  const FieldMatrix m = RandomMatrix(4, 2, 3);
  const auto w = WedgeVector(m, std::vector<VertexId>{0, 1});
  int idx = 0;
  for (int r1 = 0; r1 < 4; ++r1) {
    for (int r2 = r1 + 1; r2 < 4; ++r2, ++idx) {
      const Elem det = Determinant(
          {m.at(r1, 0), m.at(r1, 1), m.at(r2, 0), m.at(r2, 1)}, 2);
      EXPECT_EQ(w[idx], det) << r1 << "," << r2;
    }
  }
}

TEST(WedgeVector, ExtendMatchesDirect) {
  const FieldMatrix m = RandomMatrix(6, 6, 4);
  std::vector<VertexId> x;
  std::vector<Elem> wedge{1};
  for (VertexId v : {4, 1, 3, 0}) {
    wedge = ExtendWedge(wedge, static_cast<int>(x.size()), m.column(v));
    x.push_back(v);
    EXPECT_EQ(wedge, WedgeVector(m, x));
  }
}

TEST(MinQRepresentative, SingletonUnchanged) {
  const FieldMatrix m = RandomMatrix(4, 6, 5);
  const WeightedFamily family{{{1, 3}}, {7}};
  const auto out = MinQRepresentative(m, family, 2);
  EXPECT_EQ(out.sets, family.sets);
  EXPECT_EQ(out.weights, family.weights);
}

TEST(MinQRepresentative, AllSubsetsOfABasis) {
  const int k = 5;
  const FieldMatrix m = RandomMatrix(k, k, 6);
  for (int p = 1; p <= k; ++p) {
    WeightedFamily family;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) != p) continue;
      std::vector<VertexId> s;
      for (int v = 0; v < k; ++v) {
        if (mask >> v & 1) s.push_back(v);
      }
      family.sets.push_back(s);
      family.weights.push_back(mask % 4);
    }
    const auto out = MinQRepresentative(m, family, k - p);
    EXPECT_EQ(out.size(), family.size());
    EXPECT_EQ(static_cast<std::uint64_t>(out.size()), Binomial(k, p));
  }
}

TEST(MinQRepresentative, RandomFamiliesPassTheCheck) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int k = 3 + static_cast<int>(seed % 6);        // 3..8
    const int p = 1 + static_cast<int>(seed % std::min(4, k - 1));
    const int q = std::min(4, k - p);
    const FieldMatrix m = MatroidMatrix(9, k, seed);
    const auto family = RandomFamily(m, p, 25, seed);
    const auto out = MinQRepresentative(m, family, q);
    EXPECT_LE(static_cast<std::uint64_t>(out.size()), Binomial(p + q, p));
    EXPECT_TRUE(CheckRepresentative(m, family, out, q)) << "seed " << seed;
    // Idempotent.
    const auto again = MinQRepresentative(m, out, q);
    EXPECT_EQ(again.sets, out.sets);
  }
}

TEST(MinQRepresentative, Transitive) {
  const FieldMatrix m = MatroidMatrix(9, 6, 77);
  const auto family = RandomFamily(m, 2, 30, 77);
  const auto first = MinQRepresentative(m, family, 3);
  WeightedFamily shuffled = first;
  std::reverse(shuffled.sets.begin(), shuffled.sets.end());
  std::reverse(shuffled.weights.begin(), shuffled.weights.end());
  const auto second = MinQRepresentative(m, shuffled, 3);
  EXPECT_TRUE(CheckRepresentative(m, family, second, 3));
}

TEST(MinQRepresentative, Errors) {
  const FieldMatrix m = RandomMatrix(3, 5, 8);
  const WeightedFamily mixed{{{0}, {1, 2}}, {1, 1}};
  EXPECT_THROW(MinQRepresentative(m, mixed, 1), Error);
  const WeightedFamily pair{{{0, 1}}, {1}};
  try {
    MinQRepresentative(m, pair, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankDeficient);
  }
  FieldMatrix low(3, 4);
  low.at(0, 0) = low.at(0, 1) = low.at(1, 2) = 1;
  try {
    MinQRepresentative(low, pair, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankDeficient);
  }
}

TEST(CheckRepresentative, TrivialCases) {
  const FieldMatrix m = RandomMatrix(3, 5, 9);
  const WeightedFamily family{{{0, 1}, {2, 3}}, {1, 2}};
  EXPECT_TRUE(CheckRepresentative(m, family, family, 1));
  EXPECT_FALSE(CheckRepresentative(m, family, WeightedFamily{}, 1));
  // Dropping the lighter set loses the weight guarantee at Y = {}.
  const WeightedFamily heavy{{{2, 3}}, {2}};
  EXPECT_FALSE(CheckRepresentative(m, family, heavy, 0));
}

TEST(SelectRepresentatives, StableByWeight) {
  const std::vector<std::vector<Elem>> wedges = {{1, 0}, {2, 0}, {0, 1}, {1, 1}};
  const std::vector<Length> weights = {3, 1, 1, 0};
  const auto kept = SelectRepresentatives(wedges, weights, 2);
  EXPECT_EQ(kept, (std::vector<int>{3, 1}));
}

}  // namespace
}  // namespace fairpath
