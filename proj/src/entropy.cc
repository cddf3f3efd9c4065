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

#include "spir/entropy.h"

#include <cmath>
#include <unordered_map>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace spir {

std::string SourceBlockName(const SourceBlock& b) {
  return b.randomness ? "R" : absl::StrCat("W", b.message);
}

std::vector<std::size_t> BlockColumns(const SourceLayout& layout,
                                      const std::vector<SourceBlock>& blocks) {
  std::vector<std::size_t> cols;
  for (const SourceBlock& b : blocks) {
    const std::vector<std::size_t> c = b.randomness
                                           ? layout.RandomnessColumns()
                                           : layout.MessageColumns(b.message);
    cols.insert(cols.end(), c.begin(), c.end());
  }
  return cols;
}

namespace {

std::vector<std::size_t> ComplementColumns(const SourceLayout& layout,
                                           const std::vector<SourceBlock>& b) {
  std::vector<bool> excluded(layout.total(), false);
  for (std::size_t c : BlockColumns(layout, b)) excluded[c] = true;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < layout.total(); ++c) {
    if (!excluded[c]) keep.push_back(c);
  }
  return keep;
}

// Shannon entropy in base q of a count table, and whether it is uniform over
// exactly q^m outcomes (in which case *exact = m).
double TableEntropy(const std::unordered_map<std::string, std::uint64_t>& table,
                    std::uint64_t total, std::uint32_t q, bool* uniform,
                    int* exact) {
  double h = 0.0;
  std::uint64_t first = table.empty() ? 0 : table.begin()->second;
  bool equal = true;
  for (const auto& [key, count] : table) {
    const double p = static_cast<double>(count) / static_cast<double>(total);
    h -= p * std::log(p);
    if (count != first) equal = false;
  }
  h /= std::log(static_cast<double>(q));
  *uniform = false;
  if (equal) {
    std::uint64_t size = table.size();
    int m = 0;
    while (size % q == 0 && size > 1) {
      size /= q;
      ++m;
    }
    if (size == 1) {
      *uniform = true;
      *exact = m;
    }
  }
  return h;
}

}  // namespace

int LinearEntropy(const FieldMatrix& coefficients, const SourceLayout& layout,
                  const EntropyQuery& query) {
  const std::vector<std::size_t> keep =
      ComplementColumns(layout, query.given_blocks);
  std::vector<std::size_t> joint = query.given_forms;
  joint.insert(joint.end(), query.forms.begin(), query.forms.end());
  const FieldMatrix restricted = coefficients.SelectColumns(keep);
  const std::size_t all = restricted.SelectRows(joint).Rank();
  const std::size_t given = query.given_forms.empty()
                                ? 0
                                : restricted.SelectRows(query.given_forms).Rank();
  return static_cast<int>(all - given);
}

int LinearEntropy(const SchemeInstance& instance, const EntropyQuery& query) {
  return LinearEntropy(CoefficientMatrix(instance), SourceLayout::Of(instance),
                       query);
}

absl::StatusOr<OracleResult> EntropyOracle(const SchemeInstance& instance,
                                           const EntropyQuery& query,
                                           std::uint64_t budget) {
  const SourceLayout layout = SourceLayout::Of(instance);
  const std::uint32_t q = instance.field.modulus();
  const std::size_t n = layout.total();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (points > budget / q) {
      return absl::ResourceExhaustedError(absl::StrCat(
          q, "^", n, " source vectors exceed the budget of ", budget));
    }
    points *= q;
  }
  const FieldMatrix m = CoefficientMatrix(instance);
  const std::vector<std::size_t> block_cols =
      BlockColumns(layout, query.given_blocks);

  // Sparse rows for evaluation.
  auto sparse = [&](const std::vector<std::size_t>& rows) {
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> out;
    for (std::size_t r : rows) {
      auto& row = out.emplace_back();
      for (std::size_t c = 0; c < n; ++c) {
        if (m(r, c) != 0) row.emplace_back(c, m(r, c));
      }
    }
    return out;
  };
  const auto f_rows = sparse(query.forms);
  const auto g_rows = sparse(query.given_forms);

  std::unordered_map<std::string, std::uint64_t> joint;
  std::unordered_map<std::string, std::uint64_t> given;
  std::vector<std::uint32_t> x(n, 0);
  std::string key;
  for (std::uint64_t p = 0; p < points; ++p) {
    key.clear();
    auto emit = [&](std::uint32_t v) {
      key.append(reinterpret_cast<const char*>(&v), sizeof(v));
    };
    for (const auto& row : g_rows) {
      std::uint64_t v = 0;
      for (const auto& [c, a] : row) v += static_cast<std::uint64_t>(a) * x[c] % q;
      emit(static_cast<std::uint32_t>(v % q));
    }
    for (std::size_t c : block_cols) emit(x[c]);
    ++given[key];
    for (const auto& row : f_rows) {
      std::uint64_t v = 0;
      for (const auto& [c, a] : row) v += static_cast<std::uint64_t>(a) * x[c] % q;
      emit(static_cast<std::uint32_t>(v % q));
    }
    ++joint[key];
    // Next source vector.
    for (std::size_t i = 0; i < n; ++i) {
      if (++x[i] < q) break;
      x[i] = 0;
    }
  }
  bool joint_uniform = false;
  bool given_uniform = false;
  int joint_exact = 0;
  int given_exact = 0;
  const double hj = TableEntropy(joint, points, q, &joint_uniform, &joint_exact);
  const double hg = TableEntropy(given, points, q, &given_uniform, &given_exact);
  OracleResult result;
  result.uniform = joint_uniform && given_uniform;
  if (result.uniform) {
    result.entropy = Rational(joint_exact - given_exact);
  } else {
    constexpr std::int64_t kScale = 1'000'000'000;
    result.entropy =
        Rational(std::llround((hj - hg) * static_cast<double>(kScale)), kScale);
  }
  return result;
}

}  // namespace spir
