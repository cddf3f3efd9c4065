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

#ifndef SPIR_PRIME_FIELD_H_
#define SPIR_PRIME_FIELD_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"

namespace spir {

bool IsPrime(std::uint64_t n);

// Arithmetic in F_q for a prime q < 2^31. Elements are plain residues.
class PrimeField {
 public:
  static absl::StatusOr<PrimeField> Create(std::uint32_t q);
  static PrimeField Binary() { return PrimeField(2); }

  std::uint32_t modulus() const { return q_; }

  std::uint32_t Reduce(std::int64_t v) const;
  std::uint32_t Add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t Sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t Mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t Neg(std::uint32_t a) const;
  absl::StatusOr<std::uint32_t> Inverse(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  explicit PrimeField(std::uint32_t q) : q_(q) {}

  std::uint32_t q_;
};

class FieldElement {
 public:
  // Reduces `value` modulo q; q must be prime.
  static absl::StatusOr<FieldElement> Create(std::int64_t value,
                                             std::uint32_t q);
  FieldElement(const PrimeField& field, std::int64_t value)
      : field_(field), value_(field.Reduce(value)) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return field_.modulus(); }
  const PrimeField& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  // The operators require both operands to share a modulus; use FieldArith
  // for the checked variant.
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  absl::StatusOr<FieldElement> Inverse() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  std::string ToString() const;

 private:
  PrimeField field_;
  std::uint32_t value_;
};

enum class FieldOp { kAdd, kSub, kMul, kInverse };

// Checked arithmetic. kInverse ignores `b` apart from the modulus check.
absl::StatusOr<FieldElement> FieldArith(const FieldElement& a,
                                        const FieldElement& b, FieldOp op);

}  // namespace spir

#endif  // SPIR_PRIME_FIELD_H_
