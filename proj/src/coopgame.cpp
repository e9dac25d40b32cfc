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

#include "streamshare/coopgame.hpp"

#include "streamshare/error.hpp"

namespace streamshare {

namespace {

// Coalitions are 32-bit masks and worth tables are indexed by them.
constexpr std::size_t kMaskWidthLimit = 30;

void requireWithinCap(std::size_t n, unsigned cap, std::string_view what) {
  if (n > kMaskWidthLimit) {
    throw Error(ErrorCode::TooManyArtists, std::to_string(n) + " artists exceeds the coalition mask width");
  }
  if (n > cap) {
    throw Error(ErrorCode::TooManyArtists, std::to_string(n) + " artists exceeds the " +
                                               std::string(what) + " cap of " + std::to_string(cap));
  }
}

std::vector<kernels::Mask> listMasks(const Problem& p) {
  std::vector<kernels::Mask> masks(p.userCount(), 0);
  for (std::size_t i = 0; i < p.artistCount(); ++i) {
    for (std::size_t j = 0; j < p.userCount(); ++j) {
      if (p.streams(i, j) > 0) masks[j] |= kernels::Mask{1} << i;
    }
  }
  return masks;
}

std::vector<Rational> toRational(const std::vector<std::int64_t>& counts) {
  std::vector<Rational> out;
  out.reserve(counts.size());
  for (auto c : counts) out.push_back(makeRational(c));
  return out;
}

}  // namespace

std::string_view stanceName(Stance stance) {
  switch (stance) {
    case Stance::Pessimistic: return "pessimistic";
    case Stance::Optimistic: return "optimistic";
    case Stance::Custom: return "custom";
  }
  return "custom";
}

std::optional<Stance> parseStance(std::string_view name) {
  if (name == "pessimistic") return Stance::Pessimistic;
  if (name == "optimistic") return Stance::Optimistic;
  return std::nullopt;
}

CoalitionGame CoalitionGame::fromTable(std::vector<std::string> players, std::vector<Rational> worth,
                                       Stance stance, EnumerationCaps caps) {
  requireWithinCap(players.size(), caps.gameArtists, "game");
  if (players.empty()) throw Error(ErrorCode::EmptyArtists, "a game needs at least one player");
  if (worth.size() != (std::size_t{1} << players.size())) {
    throw Error(ErrorCode::ShapeMismatch, "worth table has " + std::to_string(worth.size()) +
                                              " entries for " + std::to_string(players.size()) +
                                              " players");
  }
  if (worth.front() != 0) throw Error(ErrorCode::ShapeMismatch, "worth of the empty coalition must be 0");
  CoalitionGame g;
  g.players_ = std::move(players);
  g.worth_ = std::move(worth);
  g.stance_ = stance;
  return g;
}

std::string CoalitionGame::label() const {
  std::string base(stanceName(stance_));
  return dual_ ? "dual(" + base + ")" : base;
}

CoalitionGame pessimisticGame(const Problem& p, EnumerationCaps caps, Execution exec) {
  requireWithinCap(p.artistCount(), caps.gameArtists, "game");
  const auto masks = listMasks(p);
  const auto n = static_cast<unsigned>(p.artistCount());
  return CoalitionGame::fromTable(p.artists(), toRational(kernels::pessimisticWorth(masks, n, exec)),
                                  Stance::Pessimistic, caps);
}

CoalitionGame optimisticGame(const Problem& p, EnumerationCaps caps, Execution exec) {
  requireWithinCap(p.artistCount(), caps.gameArtists, "game");
  const auto masks = listMasks(p);
  const auto n = static_cast<unsigned>(p.artistCount());
  return CoalitionGame::fromTable(p.artists(), toRational(kernels::optimisticWorth(masks, n, exec)),
                                  Stance::Optimistic, caps);
}

CoalitionGame dualGame(const CoalitionGame& g, Execution exec) {
  CoalitionGame d;
  d.players_ = g.players_;
  d.worth_ = kernels::dualWorth(g.worth_, g.playerCount(), exec);
  d.stance_ = g.stance_;
  d.dual_ = !g.dual_;
  return d;
}

IndexVector shapleyValueBruteForce(const CoalitionGame& g, ShapleyMode mode, EnumerationCaps caps,
                                   Execution exec) {
  const unsigned n = g.playerCount();
  if (mode == ShapleyMode::Auto) {
    mode = n <= caps.permutationArtists ? ShapleyMode::Permutation : ShapleyMode::SubsetWeighted;
  }
  if (mode == ShapleyMode::Permutation) {
    requireWithinCap(n, caps.permutationArtists, "permutation");
    return IndexVector{kernels::permutationShapley(g.table(), n, exec)};
  }
  requireWithinCap(n, caps.gameArtists, "game");
  return IndexVector{kernels::subsetWeightedShapley(g.table(), n, exec)};
}

}  // namespace streamshare
