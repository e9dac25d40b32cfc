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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streamshare/indices.hpp"
#include "streamshare/kernels.hpp"
#include "streamshare/problem.hpp"
#include "streamshare/rational.hpp"

namespace streamshare {

/// Limits on exhaustive enumeration. Exceeding one is a TooManyArtists error.
struct EnumerationCaps {
  unsigned gameArtists = 20;         // 2^n worth table
  unsigned permutationArtists = 10;  // n! orders in the literal Shapley definition
};

enum class Stance { Pessimistic, Optimistic, Custom };

std::string_view stanceName(Stance stance);
std::optional<Stance> parseStance(std::string_view name);

/// TU game over the artists of a problem, worth materialized for all 2^n
/// coalitions (bit k of a coalition = artist k in canonical order).
class CoalitionGame {
 public:
  /// Throws ShapeMismatch unless worth.size() == 2^players.size() and
  /// worth[0] == 0; TooManyArtists above caps.gameArtists.
  static CoalitionGame fromTable(std::vector<std::string> players, std::vector<Rational> worth,
                                 Stance stance = Stance::Custom, EnumerationCaps caps = {});

  const std::vector<std::string>& players() const noexcept { return players_; }
  unsigned playerCount() const noexcept { return static_cast<unsigned>(players_.size()); }
  kernels::Mask grandCoalition() const noexcept {
    return static_cast<kernels::Mask>(worth_.size() - 1);
  }

  const Rational& worth(kernels::Mask coalition) const { return worth_.at(coalition); }
  const std::vector<Rational>& table() const noexcept { return worth_; }

  Stance stance() const noexcept { return stance_; }
  /// True for an odd number of dualGame applications.
  bool isDual() const noexcept { return dual_; }
  /// "pessimistic", "dual(optimistic)", ...
  std::string label() const;

  /// Same players and identical worth on every coalition.
  bool sameWorth(const CoalitionGame& other) const {
    return players_ == other.players_ && worth_ == other.worth_;
  }

 private:
  friend CoalitionGame dualGame(const CoalitionGame&, Execution);
  CoalitionGame() = default;

  std::vector<std::string> players_;
  std::vector<Rational> worth_;
  Stance stance_ = Stance::Custom;
  bool dual_ = false;
};

/// v(S) = number of users whose whole listening list lies inside S.
CoalitionGame pessimisticGame(const Problem& p, EnumerationCaps caps = {},
                              Execution exec = Execution::Parallel);
/// v(S) = number of users who streamed at least one artist in S.
CoalitionGame optimisticGame(const Problem& p, EnumerationCaps caps = {},
                             Execution exec = Execution::Parallel);
/// v*(S) = v(N) - v(N \ S).
CoalitionGame dualGame(const CoalitionGame& g, Execution exec = Execution::Parallel);

enum class ShapleyMode { Auto, Permutation, SubsetWeighted };

/// Shapley value from the game's worth table. Auto uses the permutation
/// definition up to caps.permutationArtists and the subset-weighted form above
/// that (up to caps.gameArtists). An explicit mode over its cap is an error.
IndexVector shapleyValueBruteForce(const CoalitionGame& g, ShapleyMode mode = ShapleyMode::Auto,
                                   EnumerationCaps caps = {}, Execution exec = Execution::Parallel);

}  // namespace streamshare
