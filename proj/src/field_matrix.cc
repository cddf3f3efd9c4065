// Copyright 2026 The spir-graph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spir/field_matrix.h"

#include <cassert>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace spir {

FieldMatrix::FieldMatrix(const PrimeField& field, std::size_t rows,
                         std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

absl::StatusOr<FieldMatrix> FieldMatrix::FromRows(
    const PrimeField& field,
    const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      return absl::InvalidArgumentError(absl::StrCat(
          "row ", r, " has ", rows[r].size(), " entries, expected ", cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m.Set(r, c, rows[r][c]);
  }
  return m;
}

FieldMatrix FieldMatrix::Identity(const PrimeField& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.Set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::Transposed() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t.data_[c * rows_ + r] = (*this)(r, c);
    }
  }
  return t;
}

FieldMatrix FieldMatrix::SelectRows(std::span<const std::size_t> rows) const {
  FieldMatrix m(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i] < rows_);
    std::copy_n(data_.begin() + rows[i] * cols_, cols_,
                m.data_.begin() + i * cols_);
  }
  return m;
}

FieldMatrix FieldMatrix::SelectColumns(
    std::span<const std::size_t> cols) const {
  FieldMatrix m(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      assert(cols[i] < cols_);
      m.data_[r * cols.size() + i] = (*this)(r, cols[i]);
    }
  }
  return m;
}

FieldMatrix FieldMatrix::WithRow(std::span<const std::uint32_t> row) const {
  assert(row.size() == cols_);
  FieldMatrix m = *this;
  m.data_.insert(m.data_.end(), row.begin(), row.end());
  ++m.rows_;
  return m;
}

namespace {

// Reduces `a` (rows x cols, row-major) to row echelon form in place and
// returns the pivot column of each nonzero row.
std::vector<std::size_t> Eliminate(const PrimeField& f,
                                   std::vector<std::uint32_t>& a,
                                   std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + pivot * cols + cols,
                       a.begin() + rank * cols);
    }
    const std::uint32_t inv = *f.Inverse(a[rank * cols + c]);
    for (std::size_t k = c; k < cols; ++k) {
      a[rank * cols + k] = f.Mul(a[rank * cols + k], inv);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const std::uint32_t factor = a[r * cols + c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        a[r * cols + k] =
            f.Sub(a[r * cols + k], f.Mul(factor, a[rank * cols + k]));
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

std::size_t FieldMatrix::Rank() const {
  std::vector<std::uint32_t> a = data_;
  return Eliminate(field_, a, rows_, cols_).size();
}

std::optional<std::vector<std::uint32_t>> FieldMatrix::SolveLeft(
    std::span<const std::uint32_t> target) const {
  assert(target.size() == cols_);
  // x * M = t  <=>  M^T x^T = t^T. Augment M^T with t and reduce.
  const std::size_t aug_cols = rows_ + 1;
  std::vector<std::uint32_t> a(cols_ * aug_cols, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) a[c * aug_cols + r] = (*this)(r, c);
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    a[c * aug_cols + rows_] = field_.Reduce(target[c]);
  }
  const std::vector<std::size_t> pivots = Eliminate(field_, a, cols_, aug_cols);
  if (!pivots.empty() && pivots.back() == rows_) return std::nullopt;
  std::vector<std::uint32_t> x(rows_, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    x[pivots[i]] = a[i * aug_cols + rows_];
  }
  return x;
}

std::vector<std::uint32_t> FieldMatrix::LeftMultiply(
    std::span<const std::uint32_t> x) const {
  assert(x.size() == rows_);
  std::vector<std::uint32_t> out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      out[c] = field_.Add(out[c], field_.Mul(x[r], (*this)(r, c)));
    }
  }
  return out;
}

std::string FieldMatrix::ToString() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      absl::StrAppend(&out, c == 0 ? "" : " ", (*this)(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace spir
