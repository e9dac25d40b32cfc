// Copyright 2026 The streamshare Authors
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

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streamshare/problem.hpp"
#include "streamshare/rational.hpp"

namespace streamshare {

// Popularity indices.
//
//   shapley      Sh_i = sum over users j with i in L^j of 1/|L^j|
//   proRata      P_i  = T_i
//   userCentric  U_i  = sum_j t_ij / T^j
//   i1           m/|N'| on artists with at least one fan, 0 elsewhere
//   i2           m/n for every artist
//   i3           sum over users j with i in L^j of w_j/|L^j|        (user weights)
//   i4           sum over users j with i in L^j of w_i / sum_{k in L^j} w_k  (artist weights)
//
// i1..i4 exist to show that each axiom in the Shapley characterizations is
// needed; they are not meant as payout rules.

enum class IndexTag { Shapley, ProRata, UserCentric, I1, I2, I3, I4 };

std::string_view indexName(IndexTag tag);
std::optional<IndexTag> parseIndexTag(std::string_view name);

inline constexpr std::uint64_t kDefaultWeightSeed = 0x5eedULL;

/// Deterministic weight in {1,...,5} derived from an identifier.
Rational defaultWeight(std::string_view id, std::uint64_t seed = kDefaultWeightSeed);

using WeightMap = std::map<std::string, Rational, std::less<>>;

struct IndexKind {
  IndexTag tag = IndexTag::Shapley;
  // i3 keys are user ids, i4 keys are artist ids. Without a map the weights
  // come from defaultWeight(id, weightSeed).
  std::optional<WeightMap> weights;
  std::uint64_t weightSeed = kDefaultWeightSeed;

  static IndexKind of(IndexTag tag) { return IndexKind{tag, std::nullopt, kDefaultWeightSeed}; }
  /// Throws NonpositiveWeight for any weight <= 0.
  static IndexKind weighted(IndexTag tag, WeightMap weights);

  bool isWeighted() const noexcept { return tag == IndexTag::I3 || tag == IndexTag::I4; }
  /// Throws MissingWeights when an explicit map lacks `id`.
  Rational weightOf(std::string_view id) const;
  std::string name() const { return std::string(indexName(tag)); }
};

struct IndexVector {
  std::vector<Rational> values;

  Rational total() const { return sum(values); }
  bool operator==(const IndexVector&) const = default;
};

struct AllocationReport {
  IndexVector index;
  std::vector<Rational> rewards;
  Rational total;  // m
};

IndexVector shapleyIndex(const Problem& p);
IndexVector proRataIndex(const Problem& p);
IndexVector userCentricIndex(const Problem& p);
/// kind.tag must be one of i1..i4 (Usage error otherwise).
IndexVector appendixIndex(const IndexKind& kind, const Problem& p);
IndexVector computeIndex(const IndexKind& kind, const Problem& p);

/// R_i = I_i / sum_k I_k * m. Throws ZeroTotalIndex when the index sums to 0.
AllocationReport rewards(const IndexVector& index, const Problem& p);

}  // namespace streamshare
