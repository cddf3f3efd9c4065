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

#ifndef SPIR_RATIONAL_H_
#define SPIR_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "boost/multiprecision/cpp_int.hpp"

namespace spir {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : value_(n) {}  // NOLINT: implicit by design of use
  Rational(std::int64_t num, std::int64_t den);  // den != 0

  static absl::StatusOr<Rational> Create(const BigInt& num, const BigInt& den);
  // Parses "p/q" or "p".
  static absl::StatusOr<Rational> Parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_zero() const { return value_ == 0; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  // o must be nonzero; use DividedBy for the checked form.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  absl::StatusOr<Rational> DividedBy(const Rational& o) const;
  absl::StatusOr<Rational> Inverse() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  // "p/q", or "p" when the denominator is 1.
  std::string ToString() const;
  double ToDouble() const;

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value v) : value_(std::move(v)) {}

  Value value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

enum class RationalOp { kAdd, kSub, kMul, kDiv };

absl::StatusOr<Rational> RationalArith(const Rational& a, const Rational& b,
                                       RationalOp op);

}  // namespace spir

#endif  // SPIR_RATIONAL_H_
