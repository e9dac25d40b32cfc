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

#include "streamshare/indices.hpp"

#include <array>
#include <utility>

#include "streamshare/error.hpp"

namespace streamshare {

namespace {

constexpr std::array<std::pair<IndexTag, std::string_view>, 7> kIndexNames{{
    {IndexTag::Shapley, "shapley"},
    {IndexTag::ProRata, "proRata"},
    {IndexTag::UserCentric, "userCentric"},
    {IndexTag::I1, "i1"},
    {IndexTag::I2, "i2"},
    {IndexTag::I3, "i3"},
    {IndexTag::I4, "i4"},
}};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per user, the artist positions with t_ij > 0.
std::vector<std::vector<std::size_t>> listsOf(const Problem& p) {
  std::vector<std::vector<std::size_t>> lists(p.userCount());
  for (std::size_t i = 0; i < p.artistCount(); ++i) {
    for (std::size_t j = 0; j < p.userCount(); ++j) {
      if (p.streams(i, j) > 0) lists[j].push_back(i);
    }
  }
  return lists;
}

IndexVector zeros(const Problem& p) {
  return IndexVector{std::vector<Rational>(p.artistCount(), Rational(0))};
}

}  // namespace

std::string_view indexName(IndexTag tag) {
  for (const auto& [t, name] : kIndexNames) {
    if (t == tag) return name;
  }
  return "unknown";
}

std::optional<IndexTag> parseIndexTag(std::string_view name) {
  for (const auto& [t, n] : kIndexNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

Rational defaultWeight(std::string_view id, std::uint64_t seed) {
  return Rational(static_cast<long>(1 + splitmix64(fnv1a(id) ^ seed) % 5));
}

IndexKind IndexKind::weighted(IndexTag tag, WeightMap weights) {
  for (const auto& [id, w] : weights) {
    if (sgn(w) <= 0) {
      throw Error(ErrorCode::NonpositiveWeight, "weight for '" + id + "' is " + toFractionString(w));
    }
  }
  return IndexKind{tag, std::move(weights), kDefaultWeightSeed};
}

Rational IndexKind::weightOf(std::string_view id) const {
  if (!weights) return defaultWeight(id, weightSeed);
  auto it = weights->find(id);
  if (it == weights->end()) {
    throw Error(ErrorCode::MissingWeights, name() + " has no weight for '" + std::string(id) + "'");
  }
  if (sgn(it->second) <= 0) {
    throw Error(ErrorCode::NonpositiveWeight, "weight for '" + it->first + "' is not positive");
  }
  return it->second;
}

IndexVector shapleyIndex(const Problem& p) {
  IndexVector out = zeros(p);
  for (const auto& list : listsOf(p)) {
    const Rational share = makeRational(1, static_cast<std::int64_t>(list.size()));
    for (auto i : list) out.values[i] += share;
  }
  return out;
}

IndexVector proRataIndex(const Problem& p) {
  IndexVector out = zeros(p);
  for (std::size_t i = 0; i < p.artistCount(); ++i) {
    std::int64_t total = 0;
    for (auto t : p.row(i)) total += t;
    out.values[i] = makeRational(total);
  }
  return out;
}

IndexVector userCentricIndex(const Problem& p) {
  IndexVector out = zeros(p);
  for (std::size_t j = 0; j < p.userCount(); ++j) {
    std::int64_t userTotal = 0;
    for (std::size_t i = 0; i < p.artistCount(); ++i) userTotal += p.streams(i, j);
    for (std::size_t i = 0; i < p.artistCount(); ++i) {
      if (p.streams(i, j) > 0) out.values[i] += makeRational(p.streams(i, j), userTotal);
    }
  }
  return out;
}

IndexVector appendixIndex(const IndexKind& kind, const Problem& p) {
  const auto n = p.artistCount();
  const auto m = static_cast<long>(p.userCount());
  IndexVector out = zeros(p);
  switch (kind.tag) {
    case IndexTag::I1: {
      std::vector<bool> hasFans(n, false);
      std::size_t withFans = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (auto t : p.row(i)) hasFans[i] = hasFans[i] || t > 0;
        if (hasFans[i]) ++withFans;
      }
      // Every user streamed someone, so withFans >= 1.
      const Rational share = makeRational(m, static_cast<std::int64_t>(withFans));
      for (std::size_t i = 0; i < n; ++i) {
        if (hasFans[i]) out.values[i] = share;
      }
      return out;
    }
    case IndexTag::I2: {
      const Rational share = makeRational(m, static_cast<std::int64_t>(n));
      for (auto& v : out.values) v = share;
      return out;
    }
    case IndexTag::I3: {
      const auto lists = listsOf(p);
      for (std::size_t j = 0; j < lists.size(); ++j) {
        Rational share = kind.weightOf(p.users()[j]);
        share /= makeRational(static_cast<std::int64_t>(lists[j].size()));
        for (auto i : lists[j]) out.values[i] += share;
      }
      return out;
    }
    case IndexTag::I4: {
      std::vector<Rational> w;
      w.reserve(n);
      for (const auto& id : p.artists()) w.push_back(kind.weightOf(id));
      for (const auto& list : listsOf(p)) {
        Rational listWeight = 0;
        for (auto i : list) listWeight += w[i];
        for (auto i : list) out.values[i] += w[i] / listWeight;
      }
      return out;
    }
    default:
      throw Error(ErrorCode::Usage, kind.name() + " is not one of i1..i4");
  }
}

IndexVector computeIndex(const IndexKind& kind, const Problem& p) {
  switch (kind.tag) {
    case IndexTag::Shapley: return shapleyIndex(p);
    case IndexTag::ProRata: return proRataIndex(p);
    case IndexTag::UserCentric: return userCentricIndex(p);
    default: return appendixIndex(kind, p);
  }
}

AllocationReport rewards(const IndexVector& index, const Problem& p) {
  const Rational total = index.total();
  if (sgn(total) <= 0) throw Error(ErrorCode::ZeroTotalIndex, "index values sum to zero");
  AllocationReport report;
  report.index = index;
  report.total = Rational(static_cast<long>(p.userCount()));
  report.rewards.reserve(index.values.size());
  for (const auto& v : index.values) report.rewards.push_back(v / total * report.total);
  return report;
}

}  // namespace streamshare
