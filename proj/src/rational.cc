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

#include "spir/rational.h"

#include <cassert>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace spir {

Rational::Rational(std::int64_t num, std::int64_t den) {
  assert(den != 0);
  // cpp_rational rejects negative denominators.
  value_ = den < 0 ? Value(-BigInt(num), -BigInt(den)) : Value(num, den);
}

absl::StatusOr<Rational> Rational::Create(const BigInt& num,
                                          const BigInt& den) {
  if (den == 0) return absl::InvalidArgumentError("zero denominator");
  return Rational(den < 0 ? Value(-num, -den) : Value(num, den));
}

absl::StatusOr<Rational> Rational::Parse(std::string_view text) {
  const std::size_t slash = text.find('/');
  auto parse_int = [](std::string_view s) -> absl::StatusOr<BigInt> {
    if (s.empty()) return absl::InvalidArgumentError("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return absl::InvalidArgumentError("bare sign");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        return absl::InvalidArgumentError(
            absl::StrCat("not an integer: '", std::string(s), "'"));
      }
    }
    return BigInt(std::string(s));
  };
  if (slash == std::string_view::npos) {
    absl::StatusOr<BigInt> n = parse_int(text);
    if (!n.ok()) return n.status();
    return Create(*n, 1);
  }
  absl::StatusOr<BigInt> n = parse_int(text.substr(0, slash));
  if (!n.ok()) return n.status();
  absl::StatusOr<BigInt> d = parse_int(text.substr(slash + 1));
  if (!d.ok()) return d.status();
  return Create(*n, *d);
}

BigInt Rational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

BigInt Rational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  assert(!o.is_zero());
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(Value(-value_)); }

absl::StatusOr<Rational> Rational::DividedBy(const Rational& o) const {
  if (o.is_zero()) return absl::InvalidArgumentError("division by zero");
  return *this / o;
}

absl::StatusOr<Rational> Rational::Inverse() const {
  return Rational(1).DividedBy(*this);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::ToString() const {
  const BigInt d = denominator();
  if (d == 1) return numerator().str();
  return absl::StrCat(numerator().str(), "/", d.str());
}

double Rational::ToDouble() const { return value_.convert_to<double>(); }

absl::StatusOr<Rational> RationalArith(const Rational& a, const Rational& b,
                                       RationalOp op) {
  switch (op) {
    case RationalOp::kAdd:
      return a + b;
    case RationalOp::kSub:
      return a - b;
    case RationalOp::kMul:
      return a * b;
    case RationalOp::kDiv:
      return a.DividedBy(b);
  }
  return absl::InvalidArgumentError("unknown rational operation");
}

}  // namespace spir
