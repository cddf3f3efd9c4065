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

#ifndef SPIR_LINEAR_FORM_H_
#define SPIR_LINEAR_FORM_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "spir/graph.h"

namespace spir {

// One source symbol: either w_k(l) of message k, or the randomness symbol s_r.
struct SymbolRef {
  enum class Kind : std::uint8_t { kMessage, kRandomness };

  Kind kind = Kind::kMessage;
  MessageId message = 0;  // 0 for randomness
  int index = 0;          // 1-based

  static SymbolRef Message(MessageId k, int l) {
    return {Kind::kMessage, k, l};
  }
  static SymbolRef Randomness(int r) { return {Kind::kRandomness, 0, r}; }

  bool is_message() const { return kind == Kind::kMessage; }
  bool is_randomness() const { return kind == Kind::kRandomness; }

  // Messages before randomness; then by (message, index).
  friend auto operator<=>(const SymbolRef&, const SymbolRef&) = default;
};

// a..z for messages 1..26, w<k>(<l>) beyond that; s<r> for randomness.
std::string SymbolName(const SymbolRef& s);

struct Term {
  SymbolRef symbol;
  std::int64_t coeff = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

// Integer linear combination of source symbols, read over whichever prime
// field the owning scheme uses. Terms keep insertion order for display;
// equality ignores order. Zero coefficients are never stored.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(std::initializer_list<SymbolRef> symbols);

  // Adds coeff * s, merging with an existing term for s.
  LinearForm& Add(const SymbolRef& s, std::int64_t coeff = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t CoefficientOf(const SymbolRef& s) const;
  bool Contains(const SymbolRef& s) const { return CoefficientOf(s) != 0; }

  // Terms sorted by symbol.
  std::vector<Term> Sorted() const;
  LinearForm Mapped(const std::function<SymbolRef(const SymbolRef&)>& f) const;
  LinearForm MessagePart() const;
  LinearForm RandomnessPart() const;

  // "a1+b2+s3"; non-unit coefficients render as "2*a1" / "-a1".
  std::string ToString() const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.Sorted() == b.Sorted();
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace spir

#endif  // SPIR_LINEAR_FORM_H_
