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

#include "fairpath/field.h"

#include <utility>

#include "fairpath/error.h"

namespace fairpath {
namespace field {

Elem Pow(Elem base, std::uint64_t exp) {
  Elem result = 1;
  while (exp) {
    if (exp & 1) result = Mul(result, base);
    base = Mul(base, base);
    exp >>= 1;
  }
  return result;
}

Elem Inv(Elem a) { return Pow(a, kModulus - 2); }

}  // namespace field

namespace {

// splitmix64 finalizer.
std::uint64_t Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t CounterRng::Bits(std::uint64_t stream,
                               std::uint64_t counter) const {
  std::uint64_t key = Mix(seed_ + 0x9e3779b97f4a7c15ULL);
  key = Mix(key ^ (stream * 0xd6e8feb86659fd93ULL));
  return Mix(key + counter * 0x9e3779b97f4a7c15ULL);
}

field::Elem CounterRng::Elem(std::uint64_t stream,
                             std::uint64_t counter) const {
  // Rejection on 61-bit draws keeps the distribution uniform.
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t x =
        Bits(stream, counter * 64 + attempt) >> 3;
    if (x < field::kModulus) return x;
  }
}

field::Elem CounterRng::NonzeroElem(std::uint64_t stream,
                                    std::uint64_t counter) const {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t x = Bits(stream, counter * 64 + attempt) >> 3;
    if (x != 0 && x < field::kModulus) return x;
  }
}

namespace {

// Gaussian elimination on a row-major rows x cols buffer; returns rank.
int EliminateRank(std::vector<field::Elem>& a, int rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[static_cast<size_t>(r) * cols + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < cols; ++j) {
        std::swap(a[static_cast<size_t>(pivot) * cols + j],
                  a[static_cast<size_t>(rank) * cols + j]);
      }
    }
    const field::Elem inv = field::Inv(a[static_cast<size_t>(rank) * cols + c]);
    for (int r = rank + 1; r < rows; ++r) {
      const field::Elem f =
          field::Mul(a[static_cast<size_t>(r) * cols + c], inv);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        a[static_cast<size_t>(r) * cols + j] = field::Sub(
            a[static_cast<size_t>(r) * cols + j],
            field::Mul(f, a[static_cast<size_t>(rank) * cols + j]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int ColumnRank(const FieldMatrix& m, std::span<const int> cols) {
  // Transposed: one row per selected column, so the elimination runs over
  // the short dimension.
  const int rows = static_cast<int>(cols.size());
  std::vector<field::Elem> a(static_cast<size_t>(rows) * m.rows());
  for (int i = 0; i < rows; ++i) {
    auto col = m.column(cols[i]);
    std::copy(col.begin(), col.end(), a.begin() + static_cast<size_t>(i) * m.rows());
  }
  return EliminateRank(a, rows, m.rows());
}

int Rank(const FieldMatrix& m) {
  std::vector<int> all(m.cols());
  for (int c = 0; c < m.cols(); ++c) all[c] = c;
  return ColumnRank(m, all);
}

FieldMatrix Multiply(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product shape");
  }
  FieldMatrix out(a.rows(), b.cols());
  for (int c = 0; c < b.cols(); ++c) {
    for (int k = 0; k < a.cols(); ++k) {
      const field::Elem f = b.at(k, c);
      if (f == 0) continue;
      for (int r = 0; r < a.rows(); ++r) {
        out.at(r, c) = field::Add(out.at(r, c), field::Mul(a.at(r, k), f));
      }
    }
  }
  return out;
}

field::Elem Determinant(std::vector<field::Elem> a, int size) {
  field::Elem det = 1;
  for (int c = 0; c < size; ++c) {
    int pivot = -1;
    for (int r = c; r < size; ++r) {
      if (a[static_cast<size_t>(r) * size + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < size; ++j) {
        std::swap(a[static_cast<size_t>(pivot) * size + j],
                  a[static_cast<size_t>(c) * size + j]);
      }
      det = field::Neg(det);
    }
    const field::Elem p = a[static_cast<size_t>(c) * size + c];
    det = field::Mul(det, p);
    const field::Elem inv = field::Inv(p);
    for (int r = c + 1; r < size; ++r) {
      const field::Elem f = field::Mul(a[static_cast<size_t>(r) * size + c], inv);
      if (f == 0) continue;
      for (int j = c; j < size; ++j) {
        a[static_cast<size_t>(r) * size + j] =
            field::Sub(a[static_cast<size_t>(r) * size + j],
                       field::Mul(f, a[static_cast<size_t>(c) * size + j]));
      }
    }
  }
  return det;
}

int SpanBasis::Reduce(std::vector<field::Elem>& v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const field::Elem f = v[pivots_[i]];
    if (f == 0) continue;
    const auto& row = rows_[i];
    for (int j = 0; j < dim_; ++j) {
      if (row[j] != 0) v[j] = field::Sub(v[j], field::Mul(f, row[j]));
    }
  }
  for (int j = 0; j < dim_; ++j) {
    if (v[j] != 0) return j;
  }
  return -1;
}

bool SpanBasis::Contains(std::span<const field::Elem> v) const {
  std::vector<field::Elem> w(v.begin(), v.end());
  return Reduce(w) < 0;
}

bool SpanBasis::Insert(std::span<const field::Elem> v) {
  if (static_cast<int>(v.size()) != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "span vector dimension");
  }
  if (full()) return false;
  std::vector<field::Elem> w(v.begin(), v.end());
  const int pivot = Reduce(w);
  if (pivot < 0) return false;
  const field::Elem inv = field::Inv(w[pivot]);
  for (auto& x : w) x = field::Mul(x, inv);
  // Keep the basis fully reduced so Reduce() can run rows in any order.
  for (auto& row : rows_) {
    const field::Elem f = row[pivot];
    if (f == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (w[j] != 0) row[j] = field::Sub(row[j], field::Mul(f, w[j]));
    }
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace fairpath
