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

#include "streamshare/problem.hpp"

#include <algorithm>
#include <unordered_set>

#include "streamshare/error.hpp"

namespace streamshare {

namespace {

void requireUnique(const std::vector<std::string>& ids, std::string_view what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate " + std::string(what) + " '" + id + "'");
    }
  }
}

}  // namespace

Problem buildProblem(std::vector<std::string> artists, std::vector<std::string> users,
                     const StreamMatrix& streams) {
  if (artists.empty()) throw Error(ErrorCode::EmptyArtists, "a problem needs at least one artist");
  if (users.empty()) throw Error(ErrorCode::EmptyUsers, "a problem needs at least one user");
  if (streams.size() != artists.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(streams.size()) + " rows for " + std::to_string(artists.size()) +
                    " artists");
  }
  const std::size_t n = artists.size();
  const std::size_t m = users.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (streams[i].size() != m) {
      throw Error(ErrorCode::DimensionMismatch, "row for artist '" + artists[i] + "' has " +
                                                    std::to_string(streams[i].size()) +
                                                    " entries, expected " + std::to_string(m));
    }
  }
  requireUnique(artists, "artist");
  requireUnique(users, "user");

  Problem p;
  p.streams_.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (streams[i][j] < 0) {
        throw Error(ErrorCode::NegativeStream,
                    "t[" + artists[i] + "][" + users[j] + "] = " + std::to_string(streams[i][j]));
      }
      p.streams_.push_back(streams[i][j]);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    bool streamed = false;
    for (std::size_t i = 0; i < n && !streamed; ++i) streamed = p.streams_[i * m + j] > 0;
    if (!streamed) throw Error(ErrorCode::SilentUser, "user '" + users[j] + "' streamed nothing");
  }
  p.artists_ = std::move(artists);
  p.users_ = std::move(users);
  return p;
}

std::vector<std::string> defaultArtistIds(std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i + 1));
  return ids;
}

std::vector<std::string> defaultUserIds(std::size_t m) {
  std::vector<std::string> ids;
  ids.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    ids.push_back(j < 26 ? std::string(1, static_cast<char>('a' + j)) : "u" + std::to_string(j + 1));
  }
  return ids;
}

Problem buildProblem(const StreamMatrix& streams) {
  const std::size_t m = streams.empty() ? 0 : streams.front().size();
  return buildProblem(defaultArtistIds(streams.size()), defaultUserIds(m), streams);
}

std::size_t Problem::artistPosition(std::string_view id) const {
  auto it = std::find(artists_.begin(), artists_.end(), id);
  if (it == artists_.end()) throw Error(ErrorCode::UnknownArtist, "no artist '" + std::string(id) + "'");
  return static_cast<std::size_t>(it - artists_.begin());
}

std::size_t Problem::userPosition(std::string_view id) const {
  auto it = std::find(users_.begin(), users_.end(), id);
  if (it == users_.end()) throw Error(ErrorCode::UnknownUser, "no user '" + std::string(id) + "'");
  return static_cast<std::size_t>(it - users_.begin());
}

StreamMatrix Problem::matrix() const {
  StreamMatrix t(artistCount());
  for (std::size_t i = 0; i < artistCount(); ++i) {
    auto r = row(i);
    t[i].assign(r.begin(), r.end());
  }
  return t;
}

DerivedStats derive(const Problem& p) {
  const std::size_t n = p.artistCount();
  const std::size_t m = p.userCount();
  DerivedStats s;
  s.totalByArtist.assign(n, 0);
  s.totalByUser.assign(m, 0);
  s.fans.resize(n);
  s.lists.resize(m);
  s.profiles.assign(m, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto t = p.streams(i, j);
      s.totalByArtist[i] += t;
      s.totalByUser[j] += t;
      s.profiles[j][i] = t;
      if (t > 0) {
        s.fans[i].push_back(j);
        s.lists[j].push_back(i);
      }
    }
  }
  return s;
}

Problem ReducedProblem::toProblem() const {
  if (hasSilentUsers()) {
    throw Error(ErrorCode::SilentUser, "user '" + silentUsers.front() + "' streamed nothing after removal");
  }
  return buildProblem(artists, users, streams);
}

Problem ReducedProblem::dropSilentUsers() const {
  std::vector<std::string> kept;
  std::vector<std::size_t> columns;
  for (std::size_t j = 0; j < users.size(); ++j) {
    if (std::find(silentUsers.begin(), silentUsers.end(), users[j]) == silentUsers.end()) {
      kept.push_back(users[j]);
      columns.push_back(j);
    }
  }
  StreamMatrix t(artists.size());
  for (std::size_t i = 0; i < artists.size(); ++i) {
    for (auto j : columns) t[i].push_back(streams[i][j]);
  }
  return buildProblem(artists, std::move(kept), t);
}

ReducedProblem removeArtist(const Problem& p, std::size_t artist) {
  if (artist >= p.artistCount()) {
    throw Error(ErrorCode::UnknownArtist, "artist position " + std::to_string(artist) + " out of range");
  }
  if (p.artistCount() == 1) throw Error(ErrorCode::LastArtist, "cannot remove the only artist");

  ReducedProblem r;
  r.users = p.users();
  for (std::size_t i = 0; i < p.artistCount(); ++i) {
    if (i == artist) continue;
    r.artists.push_back(p.artists()[i]);
    auto row = p.row(i);
    r.streams.emplace_back(row.begin(), row.end());
  }
  for (std::size_t j = 0; j < p.userCount(); ++j) {
    bool streamed = false;
    for (const auto& row : r.streams) streamed = streamed || row[j] > 0;
    if (!streamed) r.silentUsers.push_back(p.users()[j]);
  }
  return r;
}

Problem removeUser(const Problem& p, std::size_t user) {
  if (user >= p.userCount()) {
    throw Error(ErrorCode::UnknownUser, "user position " + std::to_string(user) + " out of range");
  }
  if (p.userCount() == 1) throw Error(ErrorCode::LastUser, "cannot remove the only user");

  std::vector<std::string> users;
  for (std::size_t j = 0; j < p.userCount(); ++j) {
    if (j != user) users.push_back(p.users()[j]);
  }
  StreamMatrix t(p.artistCount());
  for (std::size_t i = 0; i < p.artistCount(); ++i) {
    for (std::size_t j = 0; j < p.userCount(); ++j) {
      if (j != user) t[i].push_back(p.streams(i, j));
    }
  }
  return buildProblem(p.artists(), std::move(users), t);
}

std::pair<Problem, Problem> splitByUsers(const Problem& p, std::span<const std::size_t> first) {
  const std::size_t m = p.userCount();
  std::vector<bool> inFirst(m, false);
  for (auto j : first) {
    if (j >= m || inFirst[j]) {
      throw Error(ErrorCode::BadPartition, "user position " + std::to_string(j) + " invalid or repeated");
    }
    inFirst[j] = true;
  }
  if (first.empty() || first.size() == m) {
    throw Error(ErrorCode::BadPartition, "both sides of the partition must be nonempty");
  }

  auto build = [&](bool side) {
    std::vector<std::string> users;
    StreamMatrix t(p.artistCount());
    for (std::size_t j = 0; j < m; ++j) {
      if (inFirst[j] != side) continue;
      users.push_back(p.users()[j]);
      for (std::size_t i = 0; i < p.artistCount(); ++i) t[i].push_back(p.streams(i, j));
    }
    return buildProblem(p.artists(), std::move(users), t);
  };
  return {build(true), build(false)};
}

Problem concatenateUsers(const Problem& left, const Problem& right) {
  if (left.artists() != right.artists()) {
    throw Error(ErrorCode::BadPartition, "sub-problems must share the artist list");
  }
  auto users = left.users();
  users.insert(users.end(), right.users().begin(), right.users().end());
  StreamMatrix t = left.matrix();
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto r = right.row(i);
    t[i].insert(t[i].end(), r.begin(), r.end());
  }
  return buildProblem(left.artists(), std::move(users), t);
}

}  // namespace streamshare
