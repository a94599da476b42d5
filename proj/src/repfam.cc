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

#include "fairpath/repfam.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "fairpath/error.h"
#include "fairpath/matroid.h"

namespace fairpath {

std::uint64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

namespace {

// Lexicographic rank of a sorted r-subset of [0, n).
std::uint64_t SubsetRank(std::span<const int> subset, int n) {
  std::uint64_t rank = 0;
  int prev = -1;
  const int r = static_cast<int>(subset.size());
  for (int i = 0; i < r; ++i) {
    for (int v = prev + 1; v < subset[i]; ++v) {
      rank += Binomial(n - v - 1, r - i - 1);
    }
    prev = subset[i];
  }
  return rank;
}

}  // namespace

std::vector<field::Elem> ExtendWedge(std::span<const field::Elem> wedge, int p,
                                     std::span<const field::Elem> column) {
  const int rows = static_cast<int>(column.size());
  const int q = p + 1;
  std::vector<field::Elem> out(Binomial(rows, q), 0);
  if (q > rows) return out;
  // Enumerate q-subsets R in lex order; det(R) = sum_j (-1)^(j+q-1)
  // column[R_j] * minor(R \ R_j) with j 0-based.
  std::vector<int> subset(q);
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<int> rest(p);
  for (std::uint64_t idx = 0;; ++idx) {
    field::Elem det = 0;
    for (int j = 0; j < q; ++j) {
      const field::Elem entry = column[subset[j]];
      if (entry == 0) continue;
      for (int a = 0, b = 0; a < q; ++a) {
        if (a != j) rest[b++] = subset[a];
      }
      const field::Elem minor = wedge[SubsetRank(rest, rows)];
      if (minor == 0) continue;
      const field::Elem term = field::Mul(entry, minor);
      det = ((j + q - 1) % 2 == 0) ? field::Add(det, term)
                                   : field::Sub(det, term);
    }
    out[idx] = det;
    // Next lex subset.
    int i = q - 1;
    while (i >= 0 && subset[i] == rows - q + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < q; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

std::vector<field::Elem> WedgeVector(const FieldMatrix& matrix,
                                     std::span<const VertexId> x) {
  if (static_cast<int>(x.size()) > matrix.rows()) {
    throw Error(ErrorCode::kSizeMismatch,
                "set of size " + std::to_string(x.size()) +
                    " exceeds matrix rank bound " +
                    std::to_string(matrix.rows()));
  }
  std::vector<field::Elem> wedge{1};
  for (size_t i = 0; i < x.size(); ++i) {
    wedge = ExtendWedge(wedge, static_cast<int>(i), matrix.column(x[i]));
  }
  return wedge;
}

std::vector<int> SelectRepresentatives(
    std::span<const std::vector<field::Elem>> wedges,
    std::span<const Length> weights, int dim) {
  std::vector<int> order(wedges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] < weights[b]; });
  SpanBasis basis(dim);
  std::vector<int> kept;
  for (int i : order) {
    if (basis.full()) break;
    if (basis.Insert(wedges[i])) kept.push_back(i);
  }
  return kept;
}

WeightedFamily MinQRepresentative(const FieldMatrix& matrix,
                                  const WeightedFamily& family, int q) {
  const int p = family.set_size();
  for (const auto& s : family.sets) {
    if (static_cast<int>(s.size()) != p) {
      throw Error(ErrorCode::kSizeMismatch, "family mixes set sizes");
    }
  }
  if (family.weights.size() != family.sets.size()) {
    throw Error(ErrorCode::kSizeMismatch, "one weight per set required");
  }
  if (family.sets.empty()) return family;
  const int target = p + q;
  if (target > matrix.rows()) {
    throw Error(ErrorCode::kRankDeficient,
                "p + q = " + std::to_string(target) + " exceeds " +
                    std::to_string(matrix.rows()) + " rows");
  }
  FieldMatrix working;
  if (target < matrix.rows()) {
    const CounterRng rng = CounterRng(matrix.seed).Split(0x7472756e63ULL);
    FieldMatrix projection(target, matrix.rows());
    for (int r = 0; r < target; ++r) {
      for (int c = 0; c < matrix.rows(); ++c) {
        projection.at(r, c) = rng.Elem(0, static_cast<std::uint64_t>(r) *
                                              matrix.rows() + c);
      }
    }
    working = Multiply(projection, matrix);
  } else {
    working = matrix;
  }
  if (Rank(working) < target) {
    throw Error(ErrorCode::kRankDeficient,
                "matrix rank is below p + q = " + std::to_string(target));
  }
  std::vector<std::vector<field::Elem>> wedges;
  wedges.reserve(family.sets.size());
  for (const auto& s : family.sets) wedges.push_back(WedgeVector(working, s));
  const auto kept = SelectRepresentatives(
      wedges, family.weights, static_cast<int>(Binomial(target, p)));
  WeightedFamily out;
  for (int i : kept) {
    out.sets.push_back(family.sets[i]);
    out.weights.push_back(family.weights[i]);
  }
  return out;
}

namespace {

bool Disjoint(std::span<const VertexId> a, std::span<const VertexId> b) {
  for (VertexId x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  }
  return true;
}

// Minimum weight over members disjoint from y with an independent union.
std::optional<Length> BestExtendable(const FieldMatrix& matrix,
                                     const WeightedFamily& family,
                                     std::span<const VertexId> y) {
  std::optional<Length> best;
  std::vector<VertexId> joined;
  for (int i = 0; i < family.size(); ++i) {
    if (best && family.weights[i] >= *best) continue;
    if (!Disjoint(family.sets[i], y)) continue;
    joined.assign(family.sets[i].begin(), family.sets[i].end());
    joined.insert(joined.end(), y.begin(), y.end());
    if (ColumnsIndependent(matrix, joined)) best = family.weights[i];
  }
  return best;
}

}  // namespace

bool CheckRepresentative(const FieldMatrix& matrix,
                         const WeightedFamily& family,
                         const WeightedFamily& candidate, int q) {
  const int n = matrix.cols();
  std::vector<VertexId> y;
  bool ok = true;
  std::function<void(int)> visit = [&](int next) {
    if (!ok) return;
    if (auto want = BestExtendable(matrix, family, y)) {
      auto have = BestExtendable(matrix, candidate, y);
      if (!have || *have > *want) {
        ok = false;
        return;
      }
    }
    if (static_cast<int>(y.size()) == q) return;
    for (int v = next; v < n; ++v) {
      y.push_back(v);
      visit(v + 1);
      y.pop_back();
    }
  };
  visit(0);
  return ok;
}

}  // namespace fairpath
