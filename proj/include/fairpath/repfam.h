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

#ifndef FAIRPATH_REPFAM_H_
#define FAIRPATH_REPFAM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "fairpath/field.h"
#include "fairpath/graph.h"

namespace fairpath {

// Uniform-size family of vertex sets (each sorted ascending) with weights.
struct WeightedFamily {
  std::vector<std::vector<VertexId>> sets;
  std::vector<Length> weights;

  int size() const { return static_cast<int>(sets.size()); }
  // Common set size p (0 for an empty family).
  int set_size() const {
    return sets.empty() ? 0 : static_cast<int>(sets.front().size());
  }
};

std::uint64_t Binomial(int n, int r);

// All p x p minors of the rows x p submatrix formed by the columns of `x`
// (in the given order), row subsets in lexicographic order. Nonzero iff the
// columns are independent. Throws kSizeMismatch when |x| > rows.
std::vector<field::Elem> WedgeVector(const FieldMatrix& matrix,
                                     std::span<const VertexId> x);

// Wedge vector of X + [column] from the wedge vector of the p-set X, with the
// new column placed last (Laplace expansion along it).
std::vector<field::Elem> ExtendWedge(std::span<const field::Elem> wedge, int p,
                                     std::span<const field::Elem> column);

// Greedy min-weight basis selection over wedge vectors of dimension `dim`:
// visits entries by nondecreasing weight (ties by index) and keeps an entry
// iff its vector leaves the span of those kept so far. Returns the kept
// indices in visiting order; at most `dim` of them.
std::vector<int> SelectRepresentatives(
    std::span<const std::vector<field::Elem>> wedges,
    std::span<const Length> weights, int dim);

// Min-q-representative subfamily of `family` for the matroid represented by
// `matrix`; at most C(p+q, p) sets. When p + q is below the row count the
// matrix is first truncated to rank p + q by a random (p+q) x rows
// projection seeded from matrix.seed. Throws kRankDeficient when the matrix
// (or its projection) has rank below p + q, and kSizeMismatch on mixed set
// sizes.
WeightedFamily MinQRepresentative(const FieldMatrix& matrix,
                                  const WeightedFamily& family, int q);

// Exhaustive check over every Y among the matrix columns with |Y| <= q: if
// some member of `family` is disjoint from Y with an independent union, then
// some member of `candidate` is too, at no larger weight.
bool CheckRepresentative(const FieldMatrix& matrix,
                         const WeightedFamily& family,
                         const WeightedFamily& candidate, int q);

}  // namespace fairpath

#endif  // FAIRPATH_REPFAM_H_
