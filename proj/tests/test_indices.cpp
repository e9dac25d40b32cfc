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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "streamshare/error.hpp"
#include "streamshare/indices.hpp"
#include "support.hpp"

using namespace streamshare;

namespace {

std::vector<Rational> q(std::initializer_list<std::pair<long, long>> values) {
  std::vector<Rational> out;
  for (auto [n, d] : values) out.push_back(makeRational(n, d));
  return out;
}

std::vector<Rational> rewardsOf(IndexTag tag, const Problem& p) {
  return rewards(computeIndex(IndexKind::of(tag), p), p).rewards;
}

}  // namespace

TEST_CASE("first example") {
  const auto p = buildProblem(testing::example1());
  CHECK(shapleyIndex(p).values == q({{1, 1}, {2, 1}}));
  CHECK(proRataIndex(p).values == q({{200, 1}, {200, 1}}));
  CHECK(userCentricIndex(p).values == q({{1, 1}, {2, 1}}));
  CHECK(rewardsOf(IndexTag::ProRata, p) == q({{3, 2}, {3, 2}}));
  CHECK(rewardsOf(IndexTag::UserCentric, p) == q({{1, 1}, {2, 1}}));
  CHECK(rewardsOf(IndexTag::Shapley, p) == q({{1, 1}, {2, 1}}));
}

TEST_CASE("second example") {
  const auto p = buildProblem(testing::example2());
  CHECK(shapleyIndex(p).values == q({{3, 2}, {3, 2}}));
  CHECK(proRataIndex(p).values == q({{300, 1}, {600, 1}}));
  CHECK(userCentricIndex(p).values == q({{1, 1}, {2, 1}}));
  CHECK(rewardsOf(IndexTag::ProRata, p) == q({{1, 1}, {2, 1}}));
  CHECK(rewardsOf(IndexTag::UserCentric, p) == q({{1, 1}, {2, 1}}));
  CHECK(rewardsOf(IndexTag::Shapley, p) == q({{3, 2}, {3, 2}}));
}

TEST_CASE("single entry") {
  const auto p = buildProblem({{1}});
  for (auto tag : {IndexTag::Shapley, IndexTag::ProRata, IndexTag::UserCentric}) {
    CHECK(computeIndex(IndexKind::of(tag), p).values == q({{1, 1}}));
  }
}

TEST_CASE("user-centric by hand and by a per-user loop") {
  const StreamMatrix t{{3, 0}, {1, 5}};
  const auto p = buildProblem(t);
  CHECK(userCentricIndex(p).values == q({{3, 4}, {5, 4}}));
  CHECK(userCentricIndex(p).values == testing::naiveUserCentric(t));
}

TEST_CASE("independence indices i1..i4") {
  const auto ex1 = buildProblem(testing::example1());
  CHECK(appendixIndex(IndexKind::of(IndexTag::I2), ex1).values == q({{3, 2}, {3, 2}}));

  const auto p = buildProblem({"1", "2"}, {"a", "b"}, {{1, 1}, {0, 0}});
  CHECK(appendixIndex(IndexKind::of(IndexTag::I1), p).values == q({{2, 1}, {0, 1}}));

  const auto unit = IndexKind::weighted(IndexTag::I3, {{"a", 1}, {"b", 1}, {"c", 1}});
  CHECK(appendixIndex(unit, ex1) == shapleyIndex(ex1));

  // i3: user b counts double. i4: artist 2 weighs 3 in shared lists.
  const auto ex2 = buildProblem(testing::example2());
  const auto w3 = IndexKind::weighted(IndexTag::I3, {{"a", 1}, {"b", 2}, {"c", 1}});
  CHECK(appendixIndex(w3, ex2).values == q({{2, 1}, {2, 1}}));
  const auto w4 = IndexKind::weighted(IndexTag::I4, {{"1", 1}, {"2", 3}});
  CHECK(appendixIndex(w4, ex2).values == q({{3, 4}, {9, 4}}));

  CHECK_THROWS_AS(appendixIndex(IndexKind::of(IndexTag::Shapley), ex1), Error);
  CHECK_THROWS_AS(IndexKind::weighted(IndexTag::I3, {{"a", 0}}), Error);
  const auto partial = IndexKind::weighted(IndexTag::I3, {{"a", 1}});
  try {
    appendixIndex(partial, ex1);
    FAIL("expected MissingWeights");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingWeights);
  }
}

TEST_CASE("default weights are deterministic and in range") {
  for (const auto* id : {"a", "b", "u27", "1", "artist-x"}) {
    const auto w = defaultWeight(id);
    CHECK(w == defaultWeight(id));
    CHECK(w >= 1);
    CHECK(w <= 5);
    CHECK(w.get_den() == 1);
  }
}

TEST_CASE("names round-trip") {
  for (auto tag : {IndexTag::Shapley, IndexTag::ProRata, IndexTag::UserCentric, IndexTag::I1, IndexTag::I2,
                   IndexTag::I3, IndexTag::I4}) {
    CHECK(parseIndexTag(indexName(tag)) == tag);
  }
  CHECK_FALSE(parseIndexTag("mystery").has_value());
}

TEST_CASE("rewards are scale invariant") {
  const auto p = buildProblem(testing::example1());
  auto doubled = shapleyIndex(p);
  for (auto& v : doubled.values) v *= 2;
  CHECK(rewards(doubled, p).rewards == q({{1, 1}, {2, 1}}));
  CHECK_THROWS_AS(rewards(IndexVector{q({{0, 1}, {0, 1}})}, p), Error);
}

TEST_CASE("random problems: oracles, budget balance, additivity, zero sets") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> scale(1, 97);
  for (int trial = 0; trial < 400; ++trial) {
    const auto p = testing::randomProblem(rng, 6, 7, 6);
    const auto t = p.matrix();
    const auto m = makeRational(static_cast<std::int64_t>(p.userCount()));
    const auto sh = shapleyIndex(p);
    const auto uc = userCentricIndex(p);
    CHECK(sh.values == testing::naiveShapley(t));
    CHECK(uc.values == testing::naiveUserCentric(t));
    CHECK(sh.total() == m);
    CHECK(uc.total() == m);

    const auto stats = derive(p);
    for (std::size_t i = 0; i < p.artistCount(); ++i) {
      CHECK((sh.values[i] == 0) == stats.fans[i].empty());
      CHECK((uc.values[i] == 0) == (stats.totalByArtist[i] == 0));
    }

    for (auto tag : {IndexTag::Shapley, IndexTag::ProRata, IndexTag::UserCentric, IndexTag::I3, IndexTag::I4}) {
      const auto index = computeIndex(IndexKind::of(tag), p);
      if (index.total() == 0) continue;
      const auto base = rewards(index, p);
      CHECK(sum(base.rewards) == m);
      auto scaled = index;
      const Rational lambda = makeRational(scale(rng), scale(rng));
      for (auto& v : scaled.values) v *= lambda;
      CHECK(rewards(scaled, p).rewards == base.rewards);
    }

    if (p.userCount() >= 2) {
      std::vector<std::size_t> first;
      for (std::size_t j = 0; j < p.userCount(); ++j) {
        if (rng() & 1U) first.push_back(j);
      }
      if (!first.empty() && first.size() < p.userCount()) {
        const auto [l, r] = splitByUsers(p, first);
        const auto a = shapleyIndex(l).values;
        const auto b = shapleyIndex(r).values;
        for (std::size_t i = 0; i < p.artistCount(); ++i) CHECK(sh.values[i] == a[i] + b[i]);
      }
    }
  }
}
