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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace streamshare {

using StreamMatrix = std::vector<std::vector<std::int64_t>>;

/// A streaming problem: artists N, users M and the n x m matrix of play
/// counts, t[i][j] = times user j streamed artist i.
///
/// Only obtainable through buildProblem(), so every instance satisfies:
///  - n >= 1, m >= 1, identifiers unique within each list;
///  - all counts >= 0;
///  - every user streamed something (each column sum > 0).
class Problem {
 public:
  std::size_t artistCount() const noexcept { return artists_.size(); }
  std::size_t userCount() const noexcept { return users_.size(); }

  const std::vector<std::string>& artists() const noexcept { return artists_; }
  const std::vector<std::string>& users() const noexcept { return users_; }

  std::int64_t streams(std::size_t artist, std::size_t user) const {
    return streams_[artist * users_.size() + user];
  }
  std::span<const std::int64_t> row(std::size_t artist) const {
    return {streams_.data() + artist * users_.size(), users_.size()};
  }

  /// Position of an identifier; throws UnknownArtist / UnknownUser.
  std::size_t artistPosition(std::string_view id) const;
  std::size_t userPosition(std::string_view id) const;

  StreamMatrix matrix() const;

  bool operator==(const Problem&) const = default;

 private:
  friend Problem buildProblem(std::vector<std::string>, std::vector<std::string>,
                              const StreamMatrix&);
  Problem() = default;

  std::vector<std::string> artists_;
  std::vector<std::string> users_;
  std::vector<std::int64_t> streams_;  // row-major, n x m
};

/// Errors: EmptyArtists, EmptyUsers, DimensionMismatch, NegativeStream,
/// DuplicateId, SilentUser (message names the user).
Problem buildProblem(std::vector<std::string> artists, std::vector<std::string> users,
                     const StreamMatrix& streams);

/// Convenience for tests and generators: artists "1".."n", users "a".."z"
/// (then "u27", "u28", ... beyond 26).
Problem buildProblem(const StreamMatrix& streams);
std::vector<std::string> defaultArtistIds(std::size_t n);
std::vector<std::string> defaultUserIds(std::size_t m);

struct DerivedStats {
  std::vector<std::int64_t> totalByArtist;           // T_i
  std::vector<std::int64_t> totalByUser;             // T^j
  std::vector<std::vector<std::size_t>> fans;        // F_i, user positions
  std::vector<std::vector<std::size_t>> lists;       // L^j, artist positions
  std::vector<std::vector<std::int64_t>> profiles;   // t_.j
};

DerivedStats derive(const Problem& p);

/// Result of deleting an artist row. The reduced matrix can leave a user with
/// an all-zero column, which is not a valid Problem; such users are listed in
/// silentUsers rather than dropped.
struct ReducedProblem {
  std::vector<std::string> artists;
  std::vector<std::string> users;
  StreamMatrix streams;
  std::vector<std::string> silentUsers;

  bool hasSilentUsers() const noexcept { return !silentUsers.empty(); }
  /// Throws SilentUser when flagged.
  Problem toProblem() const;
  /// Explicitly removes the flagged users. Throws EmptyUsers if none remain.
  Problem dropSilentUsers() const;
};

/// Errors: UnknownArtist (position out of range), LastArtist.
ReducedProblem removeArtist(const Problem& p, std::size_t artist);
/// Errors: UnknownUser, LastUser.
Problem removeUser(const Problem& p, std::size_t user);

/// `first` lists the user positions that form M1; the rest form M2.
/// Errors: BadPartition (empty side, duplicate or out-of-range position).
std::pair<Problem, Problem> splitByUsers(const Problem& p, std::span<const std::size_t> first);

/// Column concatenation of two problems over the same artist list.
/// Errors: BadPartition (artist lists differ), DuplicateId.
Problem concatenateUsers(const Problem& left, const Problem& right);

}  // namespace streamshare
