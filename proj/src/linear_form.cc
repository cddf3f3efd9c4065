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

#include "spir/linear_form.h"

#include <algorithm>

#include "absl/strings/str_cat.h"

namespace spir {

std::string SymbolName(const SymbolRef& s) {
  if (s.is_randomness()) return absl::StrCat("s", s.index);
  if (s.message >= 1 && s.message <= 26) {
    return absl::StrCat(std::string(1, static_cast<char>('a' + s.message - 1)),
                        s.index);
  }
  return absl::StrCat("w", s.message, "(", s.index, ")");
}

LinearForm::LinearForm(std::initializer_list<SymbolRef> symbols) {
  for (const SymbolRef& s : symbols) Add(s);
}

LinearForm& LinearForm::Add(const SymbolRef& s, std::int64_t coeff) {
  if (coeff == 0) return *this;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->symbol == s) {
      it->coeff += coeff;
      if (it->coeff == 0) terms_.erase(it);
      return *this;
    }
  }
  terms_.push_back({s, coeff});
  return *this;
}

std::int64_t LinearForm::CoefficientOf(const SymbolRef& s) const {
  for (const Term& t : terms_) {
    if (t.symbol == s) return t.coeff;
  }
  return 0;
}

std::vector<Term> LinearForm::Sorted() const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return a.symbol < b.symbol; });
  return out;
}

LinearForm LinearForm::Mapped(
    const std::function<SymbolRef(const SymbolRef&)>& f) const {
  LinearForm out;
  for (const Term& t : terms_) out.Add(f(t.symbol), t.coeff);
  return out;
}

LinearForm LinearForm::MessagePart() const {
  LinearForm out;
  for (const Term& t : terms_) {
    if (t.symbol.is_message()) out.terms_.push_back(t);
  }
  return out;
}

LinearForm LinearForm::RandomnessPart() const {
  LinearForm out;
  for (const Term& t : terms_) {
    if (t.symbol.is_randomness()) out.terms_.push_back(t);
  }
  return out;
}

std::string LinearForm::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    const std::string name = SymbolName(t.symbol);
    if (t.coeff == 1) {
      absl::StrAppend(&out, i == 0 ? "" : "+", name);
    } else if (t.coeff == -1) {
      absl::StrAppend(&out, "-", name);
    } else if (t.coeff > 0) {
      absl::StrAppend(&out, i == 0 ? "" : "+", t.coeff, "*", name);
    } else {
      absl::StrAppend(&out, t.coeff, "*", name);
    }
  }
  return out;
}

}  // namespace spir
