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

#ifndef SPIR_FIELD_MATRIX_H_
#define SPIR_FIELD_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "spir/prime_field.h"

namespace spir {

// Dense row-major matrix over F_q. Entries are stored as residues; the
// largest matrices audited here are a few dozen rows and columns.
class FieldMatrix {
 public:
  FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);

  // Entries are reduced modulo q. Fails on ragged input.
  static absl::StatusOr<FieldMatrix> FromRows(
      const PrimeField& field,
      const std::vector<std::vector<std::int64_t>>& rows);
  static FieldMatrix Identity(const PrimeField& field, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  FieldElement At(std::size_t r, std::size_t c) const {
    return FieldElement(field_, (*this)(r, c));
  }
  void Set(std::size_t r, std::size_t c, std::int64_t value) {
    data_[r * cols_ + c] = field_.Reduce(value);
  }
  std::span<const std::uint32_t> Row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  FieldMatrix Transposed() const;
  FieldMatrix SelectRows(std::span<const std::size_t> rows) const;
  FieldMatrix SelectColumns(std::span<const std::size_t> cols) const;
  // Returns a copy with `row` appended; row.size() must equal cols().
  FieldMatrix WithRow(std::span<const std::uint32_t> row) const;

  // Row rank via Gaussian elimination.
  std::size_t Rank() const;

  // Finds x with x * M = target. Any solution is acceptable; free variables
  // are set to zero. target.size() must equal cols().
  std::optional<std::vector<std::uint32_t>> SolveLeft(
      std::span<const std::uint32_t> target) const;

  // x * M for a row vector x of length rows().
  std::vector<std::uint32_t> LeftMultiply(
      std::span<const std::uint32_t> x) const;

  std::string ToString() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

}  // namespace spir

#endif  // SPIR_FIELD_MATRIX_H_
