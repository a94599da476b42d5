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

#ifndef FAIRPATH_FIELD_H_
#define FAIRPATH_FIELD_H_

#include <cstdint>
#include <span>
#include <vector>

namespace fairpath {

// Arithmetic in F_p with p = 2^61 - 1. Elements are canonical residues in
// [0, p).
namespace field {

using Elem = std::uint64_t;

inline constexpr Elem kModulus = (Elem{1} << 61) - 1;

inline constexpr Elem Add(Elem a, Elem b) {
  Elem s = a + b;
  return s >= kModulus ? s - kModulus : s;
}

inline constexpr Elem Sub(Elem a, Elem b) {
  return a >= b ? a - b : a + kModulus - b;
}

inline constexpr Elem Neg(Elem a) { return a == 0 ? 0 : kModulus - a; }

inline constexpr Elem Mul(Elem a, Elem b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  Elem lo = static_cast<Elem>(prod & kModulus);
  Elem hi = static_cast<Elem>(prod >> 61);
  Elem s = lo + hi;
  return s >= kModulus ? s - kModulus : s;
}

Elem Pow(Elem base, std::uint64_t exp);
Elem Inv(Elem a);  // a != 0

}  // namespace field

// Counter-based generator: the value at (stream, counter) depends only on the
// seed, so any sub-computation can draw reproducibly without threading state
// through callers.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t Bits(std::uint64_t stream, std::uint64_t counter) const;
  // Uniform in [1, p).
  field::Elem NonzeroElem(std::uint64_t stream, std::uint64_t counter) const;
  // Uniform in [0, p).
  field::Elem Elem(std::uint64_t stream, std::uint64_t counter) const;

  // Child generator with an independent key.
  CounterRng Split(std::uint64_t stream) const {
    return CounterRng(Bits(stream, ~std::uint64_t{0}));
  }

 private:
  std::uint64_t seed_;
};

// Dense matrix over F_p, column-major: column c occupies
// data[c * rows, (c + 1) * rows).
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  field::Elem& at(int r, int c) {
    return data_[static_cast<size_t>(c) * rows_ + r];
  }
  field::Elem at(int r, int c) const {
    return data_[static_cast<size_t>(c) * rows_ + r];
  }
  std::span<const field::Elem> column(int c) const {
    return {data_.data() + static_cast<size_t>(c) * rows_,
            static_cast<size_t>(rows_)};
  }

  // Seed and error target of the randomized construction that produced this
  // matrix (zero for hand-built matrices).
  std::uint64_t seed = 0;
  double epsilon = 0.0;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<field::Elem> data_;
};

// Rank of the column set `cols` of `m`.
int ColumnRank(const FieldMatrix& m, std::span<const int> cols);
int Rank(const FieldMatrix& m);

// Product a * b.
FieldMatrix Multiply(const FieldMatrix& a, const FieldMatrix& b);

// Determinant of a square matrix given row-major.
field::Elem Determinant(std::vector<field::Elem> square, int size);

// Incrementally maintained row-echelon basis of a subspace of F_p^dim.
class SpanBasis {
 public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool full() const { return rank() == dim_; }

  // Adds `v` if it lies outside the current span; returns whether it did.
  bool Insert(std::span<const field::Elem> v);
  bool Contains(std::span<const field::Elem> v) const;

 private:
  // Reduces `v` in place against the basis; returns the first nonzero
  // position or -1.
  int Reduce(std::vector<field::Elem>& v) const;

  int dim_;
  // Normalized rows: pivot entry 1, and no other row has a nonzero in this
  // row's pivot column.
  std::vector<std::vector<field::Elem>> rows_;
  std::vector<int> pivots_;
};

}  // namespace fairpath

#endif  // FAIRPATH_FIELD_H_
