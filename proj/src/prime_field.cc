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

#include "spir/prime_field.h"

#include <cassert>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace spir {

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

absl::StatusOr<PrimeField> PrimeField::Create(std::uint32_t q) {
  if (q >= (1u << 31)) {
    return absl::InvalidArgumentError(
        absl::StrCat("field modulus ", q, " exceeds 2^31"));
  }
  if (!IsPrime(q)) {
    return absl::InvalidArgumentError(
        absl::StrCat("field modulus ", q, " is not prime"));
  }
  return PrimeField(q);
}

std::uint32_t PrimeField::Reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::Add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t s = a + b;  // a, b < 2^31
  return s >= q_ ? s - q_ : s;
}

std::uint32_t PrimeField::Sub(std::uint32_t a, std::uint32_t b) const {
  return a >= b ? a - b : a + (q_ - b);
}

std::uint32_t PrimeField::Mul(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
}

std::uint32_t PrimeField::Neg(std::uint32_t a) const {
  return a == 0 ? 0 : q_ - a;
}

absl::StatusOr<std::uint32_t> PrimeField::Inverse(std::uint32_t a) const {
  if (a % q_ == 0) {
    return absl::InvalidArgumentError("inversion of zero");
  }
  // Extended Euclid on (a, q).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q_, new_r = a % q_;
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    std::int64_t tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  return Reduce(t);
}

absl::StatusOr<FieldElement> FieldElement::Create(std::int64_t value,
                                                  std::uint32_t q) {
  absl::StatusOr<PrimeField> field = PrimeField::Create(q);
  if (!field.ok()) return field.status();
  return FieldElement(*field, value);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  assert(a.field_ == b.field_);
  return FieldElement(a.field_, a.field_.Add(a.value_, b.value_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  assert(a.field_ == b.field_);
  return FieldElement(a.field_, a.field_.Sub(a.value_, b.value_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  assert(a.field_ == b.field_);
  return FieldElement(a.field_, a.field_.Mul(a.value_, b.value_));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_.Neg(value_));
}

absl::StatusOr<FieldElement> FieldElement::Inverse() const {
  absl::StatusOr<std::uint32_t> inv = field_.Inverse(value_);
  if (!inv.ok()) return inv.status();
  return FieldElement(field_, *inv);
}

std::string FieldElement::ToString() const {
  return absl::StrCat(value_, " (mod ", field_.modulus(), ")");
}

absl::StatusOr<FieldElement> FieldArith(const FieldElement& a,
                                        const FieldElement& b, FieldOp op) {
  if (a.modulus() != b.modulus()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "modulus mismatch: ", a.modulus(), " vs ", b.modulus()));
  }
  switch (op) {
    case FieldOp::kAdd:
      return a + b;
    case FieldOp::kSub:
      return a - b;
    case FieldOp::kMul:
      return a * b;
    case FieldOp::kInverse:
      return a.Inverse();
  }
  return absl::InvalidArgumentError("unknown field operation");
}

}  // namespace spir
