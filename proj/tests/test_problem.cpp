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
#include "streamshare/problem.hpp"
#include "support.hpp"

using namespace streamshare;

namespace {

ErrorCode codeOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Usage;
}

}  // namespace

TEST_CASE("valid problems") {
  const auto p = buildProblem({"1", "2"}, {"a", "b", "c"}, testing::example1());
  CHECK(p.artistCount() == 2);
  CHECK(p.userCount() == 3);
  CHECK(p.streams(1, 2) == 100);
  CHECK(p.matrix() == testing::example1());
  CHECK(buildProblem(testing::example1()) == p);

  const auto tiny = buildProblem({{1}});
  CHECK(tiny.artistCount() == 1);
  CHECK(tiny.userCount() == 1);
}

TEST_CASE("validation errors") {
  CHECK(codeOf([] { buildProblem({{1, 0}, {2, 0}}); }) == ErrorCode::SilentUser);
  CHECK(codeOf([] { buildProblem({{1, -1}, {2, 3}}); }) == ErrorCode::NegativeStream);
  CHECK(codeOf([] { buildProblem({{1, 1}, {2}}); }) == ErrorCode::DimensionMismatch);
  CHECK(codeOf([] { buildProblem(StreamMatrix{}); }) == ErrorCode::EmptyArtists);
  CHECK(codeOf([] { buildProblem({"1", "1"}, {"a"}, {{1}, {1}}); }) == ErrorCode::DuplicateId);
  CHECK(codeOf([] { buildProblem({"1"}, {"a", "a"}, {{1, 1}}); }) == ErrorCode::DuplicateId);
  CHECK(codeOf([] { buildProblem({"1"}, {}, {{}}); }) == ErrorCode::EmptyUsers);

  const auto p = buildProblem(testing::example1());
  CHECK(codeOf([&] { p.artistPosition("9"); }) == ErrorCode::UnknownArtist);
  CHECK(codeOf([&] { p.userPosition("z"); }) == ErrorCode::UnknownUser);
  CHECK(p.userPosition("c") == 2);
}

TEST_CASE("silent user error names the user") {
  try {
    buildProblem({"1", "2"}, {"x", "y"}, {{1, 0}, {2, 0}});
    FAIL("expected SilentUser");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("'y'") != std::string::npos);
  }
}

TEST_CASE("derived statistics on the first example") {
  const auto s = derive(buildProblem(testing::example1()));
  CHECK(s.totalByArtist == std::vector<std::int64_t>{200, 200});
  CHECK(s.totalByUser == std::vector<std::int64_t>{200, 100, 100});
  CHECK(s.fans[0] == std::vector<std::size_t>{0});
  CHECK(s.fans[1] == std::vector<std::size_t>{1, 2});
  CHECK(s.lists[0] == std::vector<std::size_t>{0});
  CHECK(s.lists[1] == std::vector<std::size_t>{1});
  CHECK(s.lists[2] == std::vector<std::size_t>{1});
  CHECK(s.profiles[1] == std::vector<std::int64_t>{0, 100});

  const auto one = derive(buildProblem({{1}}));
  CHECK(one.totalByArtist == std::vector<std::int64_t>{1});
  CHECK(one.fans[0] == std::vector<std::size_t>{0});
  CHECK(one.lists[0] == std::vector<std::size_t>{0});
}

TEST_CASE("derive matches a double-loop recomputation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = testing::randomProblem(rng, 6, 7, 9);
    const auto s = derive(p);
    for (std::size_t i = 0; i < p.artistCount(); ++i) {
      std::int64_t total = 0;
      std::vector<std::size_t> fans;
      for (std::size_t j = 0; j < p.userCount(); ++j) {
        total += p.streams(i, j);
        if (p.streams(i, j) > 0) fans.push_back(j);
        // j in F_i  <=>  i in L^j
        const auto& list = s.lists[j];
        CHECK((p.streams(i, j) > 0) == (std::find(list.begin(), list.end(), i) != list.end()));
      }
      CHECK(s.totalByArtist[i] == total);
      CHECK(s.fans[i] == fans);
    }
    for (std::size_t j = 0; j < p.userCount(); ++j) {
      std::int64_t total = 0;
      for (std::size_t i = 0; i < p.artistCount(); ++i) total += p.streams(i, j);
      CHECK(s.totalByUser[j] == total);
      CHECK(s.profiles[j].size() == p.artistCount());
    }
  }
}

TEST_CASE("removing artists") {
  const auto r1 = removeArtist(buildProblem(testing::example1()), 0);
  CHECK(r1.hasSilentUsers());
  CHECK(r1.silentUsers == std::vector<std::string>{"a"});
  CHECK_THROWS_AS(r1.toProblem(), Error);
  const auto dropped = r1.dropSilentUsers();
  CHECK(dropped.users() == std::vector<std::string>{"b", "c"});
  CHECK(dropped.matrix() == StreamMatrix{{100, 100}});

  const auto r2 = removeArtist(buildProblem({{1, 1}, {1, 1}}), 1);
  CHECK_FALSE(r2.hasSilentUsers());
  CHECK(r2.toProblem().matrix() == StreamMatrix{{1, 1}});

  const auto r3 = removeArtist(buildProblem(testing::example2()), 1);
  CHECK_FALSE(r3.hasSilentUsers());
  CHECK(r3.toProblem().artists() == std::vector<std::string>{"1"});

  CHECK(codeOf([] { removeArtist(buildProblem({{1}}), 0); }) == ErrorCode::LastArtist);
  CHECK(codeOf([] { removeArtist(buildProblem({{1}, {1}}), 2); }) == ErrorCode::UnknownArtist);
}

TEST_CASE("removing users") {
  const auto p = removeUser(buildProblem(testing::example1()), 0);
  CHECK(p.users() == std::vector<std::string>{"b", "c"});
  CHECK(p.matrix() == StreamMatrix{{0, 0}, {100, 100}});

  const auto two = buildProblem({{1, 2}});
  const auto one = removeUser(two, 0);
  CHECK(codeOf([&] { removeUser(one, 0); }) == ErrorCode::LastUser);
  CHECK(codeOf([&] { removeUser(two, 5); }) == ErrorCode::UnknownUser);
}

TEST_CASE("removeUser then derive equals recomputation") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::randomProblem(rng, 5, 6, 7);
    if (p.userCount() < 2) continue;
    const auto before = derive(p);
    for (std::size_t j = 0; j < p.userCount(); ++j) {
      const auto q = removeUser(p, j);
      const auto after = derive(q);
      for (std::size_t i = 0; i < p.artistCount(); ++i) {
        CHECK(after.totalByArtist[i] == before.totalByArtist[i] - p.streams(i, j));
      }
      auto t = p.matrix();
      for (auto& row : t) row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
      CHECK(q.matrix() == t);
    }
  }
}

TEST_CASE("splitting by users") {
  const auto p = buildProblem(testing::example1());
  const std::vector<std::size_t> a{0};
  const auto [left, right] = splitByUsers(p, a);
  CHECK(left.matrix() == StreamMatrix{{200}, {0}});
  CHECK(right.matrix() == StreamMatrix{{0, 0}, {100, 100}});
  CHECK(left.users() == std::vector<std::string>{"a"});

  const std::vector<std::size_t> ab{0, 1};
  const auto [l2, r2] = splitByUsers(p, ab);
  CHECK(concatenateUsers(l2, r2) == p);

  const std::vector<std::size_t> all{0, 1, 2};
  CHECK(codeOf([&] { splitByUsers(p, all); }) == ErrorCode::BadPartition);
  const std::vector<std::size_t> none;
  CHECK(codeOf([&] { splitByUsers(p, none); }) == ErrorCode::BadPartition);
}

TEST_CASE("split then concatenate is the identity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = buildProblem(testing::randomMatrix(rng, 3, 6, 5));
    std::vector<std::size_t> first;
    for (std::size_t j = 0; j < 6; ++j) {
      if (rng() & 1U) first.push_back(j);
    }
    if (first.empty() || first.size() == 6) continue;
    const auto [l, r] = splitByUsers(p, first);
    const auto joined = concatenateUsers(l, r);
    // Columns come back grouped by part; reorder by id to compare.
    for (std::size_t j = 0; j < p.userCount(); ++j) {
      const auto k = joined.userPosition(p.users()[j]);
      for (std::size_t i = 0; i < p.artistCount(); ++i) CHECK(joined.streams(i, k) == p.streams(i, j));
    }
  }
}
