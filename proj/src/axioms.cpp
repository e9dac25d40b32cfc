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

#include "streamshare/axioms.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <utility>

#include "streamshare/error.hpp"

namespace streamshare {

namespace {

constexpr std::array<std::pair<AxiomId, std::string_view>, 10> kAxiomNames{{
    {AxiomId::Additivity, "additivity"},
    {AxiomId::ReasonableLowerBound, "reasonableLowerBound"},
    {AxiomId::EqualGlobalImpactUsers, "equalGlobalImpactUsers"},
    {AxiomId::SymmetryOnFans, "symmetryOnFans"},
    {AxiomId::OrderPreservation, "orderPreservation"},
    {AxiomId::NonUnilateralManipulability, "nonUnilateralManipulability"},
    {AxiomId::EqualImpactArtists, "equalImpactArtists"},
    {AxiomId::NullArtists, "nullArtists"},
    {AxiomId::PairwiseHomogeneity, "pairwiseHomogeneity"},
    {AxiomId::ClickFraudProofness, "clickFraudProofness"},
}};

CheckOutcome satisfied() { return {true, false, {}}; }
CheckOutcome vacuous() { return {true, true, {}}; }
CheckOutcome violated(std::string detail) { return {false, false, std::move(detail)}; }

std::string fmt(const Rational& r) { return toFractionString(r); }

[[noreturn]] void shapeError(const std::string& message) {
  throw Error(ErrorCode::ShapeMismatch, message);
}

void requireArtist(const Problem& p, std::size_t i) {
  if (i >= p.artistCount()) shapeError("artist position " + std::to_string(i) + " out of range");
}

void requireDistinctArtists(const ArtistPair& pair) {
  requireArtist(pair.problem, pair.first);
  requireArtist(pair.problem, pair.second);
  if (pair.first == pair.second) shapeError("artist pair must name two different artists");
}

bool sameFans(const Problem& p, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < p.userCount(); ++j) {
    if ((p.streams(a, j) > 0) != (p.streams(b, j) > 0)) return false;
  }
  return true;
}

std::int64_t rowTotal(const Problem& p, std::size_t i) {
  std::int64_t total = 0;
  for (auto t : p.row(i)) total += t;
  return total;
}

// Position of `artist` once `removed` has been deleted.
std::size_t shifted(std::size_t artist, std::size_t removed) {
  return artist > removed ? artist - 1 : artist;
}

// ---- per-axiom checks ------------------------------------------------------

CheckOutcome checkAdditivity(const IndexKind& index, const UserPartition& inst) {
  const auto& p = inst.problem;
  auto [left, right] = splitByUsers(p, inst.firstPart);
  const auto whole = computeIndex(index, p);
  const auto a = computeIndex(index, left);
  const auto b = computeIndex(index, right);
  for (std::size_t i = 0; i < p.artistCount(); ++i) {
    const Rational parts = a.values[i] + b.values[i];
    if (whole.values[i] != parts) {
      return violated("artist " + p.artists()[i] + ": index on M is " + fmt(whole.values[i]) +
                      " but the two sub-problems sum to " + fmt(a.values[i]) + " + " +
                      fmt(b.values[i]) + " = " + fmt(parts));
    }
  }
  return satisfied();
}

CheckOutcome checkLowerBound(const IndexKind& index, const UserSubset& inst) {
  const auto& p = inst.problem;
  std::vector<bool> inC(p.userCount(), false);
  for (auto j : inst.coalition) {
    if (j >= p.userCount() || inC[j]) shapeError("user subset has an invalid or repeated position");
    inC[j] = true;
  }
  if (inst.coalition.empty()) return vacuous();

  const auto report = rewards(computeIndex(index, p), p);
  Rational covered = 0;
  std::string artists;
  for (std::size_t i = 0; i < p.artistCount(); ++i) {
    bool streamedByC = false;
    for (auto j : inst.coalition) streamedByC = streamedByC || p.streams(i, j) > 0;
    if (!streamedByC) continue;
    covered += report.rewards[i];
    artists += (artists.empty() ? "" : ",") + p.artists()[i];
  }
  const auto size = makeRational(static_cast<std::int64_t>(inst.coalition.size()));
  if (covered < size) {
    std::string users;
    for (auto j : inst.coalition) users += (users.empty() ? "" : ",") + p.users()[j];
    return violated("users {" + users + "} pay " + fmt(size) + " but their artists {" + artists +
                    "} receive " + fmt(covered));
  }
  return satisfied();
}

CheckOutcome checkGlobalImpact(const IndexKind& index, const SingleProblem& inst) {
  const auto& p = inst.problem;
  if (p.userCount() < 2) return vacuous();
  const Rational reference = computeIndex(index, removeUser(p, 0)).total();
  for (std::size_t j = 1; j < p.userCount(); ++j) {
    const Rational total = computeIndex(index, removeUser(p, j)).total();
    if (total != reference) {
      return violated("removing user " + p.users()[0] + " leaves index total " + fmt(reference) +
                      ", removing user " + p.users()[j] + " leaves " + fmt(total));
    }
  }
  return satisfied();
}

CheckOutcome checkSymmetryOnFans(const IndexKind& index, const ArtistPair& inst) {
  requireDistinctArtists(inst);
  const auto& p = inst.problem;
  if (!sameFans(p, inst.first, inst.second)) return vacuous();
  const auto I = computeIndex(index, p);
  const auto& a = I.values[inst.first];
  const auto& b = I.values[inst.second];
  if (a != b) {
    return violated("artists " + p.artists()[inst.first] + " and " + p.artists()[inst.second] +
                    " have the same fans but index " + fmt(a) + " != " + fmt(b));
  }
  return satisfied();
}

CheckOutcome checkOrderPreservation(const IndexKind& index, const ArtistPair& inst) {
  requireDistinctArtists(inst);
  const auto& p = inst.problem;
  for (std::size_t j = 0; j < p.userCount(); ++j) {
    if (p.streams(inst.first, j) > p.streams(inst.second, j)) return vacuous();
  }
  const auto I = computeIndex(index, p);
  const auto& low = I.values[inst.first];
  const auto& high = I.values[inst.second];
  if (low > high) {
    return violated("every user streams artist " + p.artists()[inst.second] + " at least as often as " +
                    p.artists()[inst.first] + " but index " + fmt(high) + " < " + fmt(low));
  }
  return satisfied();
}

CheckOutcome checkManipulability(const IndexKind& index, const RowChange& inst) {
  const auto& before = inst.before;
  const auto& after = inst.after;
  if (before.artists() != after.artists() || before.users() != after.users()) {
    shapeError("row change must keep the artist and user lists");
  }
  requireArtist(before, inst.artist);
  for (std::size_t k = 0; k < before.artistCount(); ++k) {
    if (k == inst.artist) continue;
    if (!std::ranges::equal(before.row(k), after.row(k))) {
      shapeError("row change alters artist " + before.artists()[k] + " as well");
    }
  }
  const auto i = inst.artist;
  for (std::size_t j = 0; j < before.userCount(); ++j) {
    const auto t = before.streams(i, j);
    const auto u = after.streams(i, j);
    if (t > u || (t > 0) != (u > 0)) return vacuous();
  }
  const auto was = computeIndex(index, before).values[i];
  const auto now = computeIndex(index, after).values[i];
  if (now > was) {
    return violated("artist " + before.artists()[i] + " raises its index from " + fmt(was) + " to " +
                    fmt(now) + " by adding streams from its own fans");
  }
  return satisfied();
}

CheckOutcome checkEqualImpactArtists(const IndexKind& index, const ArtistPair& inst) {
  requireDistinctArtists(inst);
  const auto& p = inst.problem;
  const auto a = inst.first;
  const auto b = inst.second;
  const auto withoutB = removeArtist(p, b);
  const auto withoutA = removeArtist(p, a);
  if (withoutB.hasSilentUsers() || withoutA.hasSilentUsers()) {
    throw Error(ErrorCode::InvalidReducedProblem,
                "removing artist " + p.artists()[withoutB.hasSilentUsers() ? b : a] +
                    " leaves a user with no streams");
  }
  const auto full = computeIndex(index, p);
  const Rational dropA = full.values[a] - computeIndex(index, withoutB.toProblem()).values[shifted(a, b)];
  const Rational dropB = full.values[b] - computeIndex(index, withoutA.toProblem()).values[shifted(b, a)];
  if (dropA != dropB) {
    return violated("removing " + p.artists()[b] + " changes " + p.artists()[a] + " by " + fmt(dropA) +
                    " but removing " + p.artists()[a] + " changes " + p.artists()[b] + " by " +
                    fmt(dropB));
  }
  return satisfied();
}

CheckOutcome checkNullArtists(const IndexKind& index, const SingleProblem& inst) {
  const auto& p = inst.problem;
  std::vector<std::size_t> nulls;
  for (std::size_t i = 0; i < p.artistCount(); ++i) {
    if (rowTotal(p, i) == 0) nulls.push_back(i);
  }
  if (nulls.empty()) return vacuous();
  const auto I = computeIndex(index, p);
  for (auto i : nulls) {
    if (I.values[i] != 0) {
      return violated("artist " + p.artists()[i] + " has no streams but index " + fmt(I.values[i]));
    }
  }
  return satisfied();
}

CheckOutcome checkPairwiseHomogeneity(const IndexKind& index, const ArtistPair& inst) {
  requireDistinctArtists(inst);
  const auto& p = inst.problem;
  const auto a = inst.first;
  const auto b = inst.second;
  const auto totalA = rowTotal(p, a);
  const auto totalB = rowTotal(p, b);
  if (totalA == 0 || totalB == 0) return vacuous();
  const Rational ratio = makeRational(totalB, totalA);
  for (std::size_t j = 0; j < p.userCount(); ++j) {
    if (makeRational(p.streams(b, j)) != ratio * p.streams(a, j)) return vacuous();
  }
  const auto I = computeIndex(index, p);
  const Rational expected = ratio * I.values[a];
  if (I.values[b] != expected) {
    return violated("artist " + p.artists()[b] + " is streamed " + fmt(ratio) + " times as much as " +
                    p.artists()[a] + " by every user but index " + fmt(I.values[b]) + " != " +
                    fmt(ratio) + " * " + fmt(I.values[a]));
  }
  return satisfied();
}

CheckOutcome checkClickFraud(const IndexKind& index, const ColumnChange& inst) {
  const auto& before = inst.before;
  const auto& after = inst.after;
  if (before.artists() != after.artists() || before.users() != after.users()) {
    shapeError("column change must keep the artist and user lists");
  }
  if (inst.user >= before.userCount()) shapeError("user position out of range");
  for (std::size_t i = 0; i < before.artistCount(); ++i) {
    for (std::size_t j = 0; j < before.userCount(); ++j) {
      if (j != inst.user && before.streams(i, j) != after.streams(i, j)) {
        shapeError("column change alters user " + before.users()[j] + " as well");
      }
    }
  }
  const auto r0 = rewards(computeIndex(index, before), before).rewards;
  const auto r1 = rewards(computeIndex(index, after), after).rewards;
  for (std::size_t i = 0; i < r0.size(); ++i) {
    const Rational moved = abs(r1[i] - r0[i]);
    if (moved > 1) {
      return violated("user " + before.users()[inst.user] + " changing streams moves artist " +
                      before.artists()[i] + "'s payment from " + fmt(r0[i]) + " to " + fmt(r1[i]) +
                      ", more than one subscription");
    }
  }
  return satisfied();
}

template <typename Shape>
const Shape& expect(const AxiomInstance& instance, AxiomId axiom) {
  const auto* shape = std::get_if<Shape>(&instance);
  if (shape == nullptr) {
    shapeError(std::string(axiomName(axiom)) + " does not take this instance shape");
  }
  return *shape;
}

// ---- trial generation ------------------------------------------------------

using Rng = std::mt19937_64;

std::uint64_t draw(Rng& rng, std::uint64_t bound) { return rng() % bound; }

Rng trialRng(std::uint64_t seed, AxiomId axiom, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(axiom)};
  return Rng(seq);
}

std::int64_t randomEntry(Rng& rng, std::int64_t maxEntry) {
  if (draw(rng, 5) < 2) return 0;
  return 1 + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(maxEntry)));
}

// Random problem, frequently with a planted relation between two rows so that
// the pair-quantified axioms are not vacuous: equal supports, proportional
// rows, a dominating row, or a zero row.
Problem randomProblem(Rng& rng, const SizeBounds& bounds) {
  const auto n = 1 + static_cast<std::size_t>(draw(rng, bounds.maxArtists));
  const auto m = 1 + static_cast<std::size_t>(draw(rng, bounds.maxUsers));
  StreamMatrix t(n, std::vector<std::int64_t>(m, 0));
  for (auto& row : t) {
    for (auto& v : row) v = randomEntry(rng, bounds.maxEntry);
  }

  enum Plant { None, SameFans, Proportional, Dominating, ZeroRow };
  auto plant = n >= 2 ? static_cast<Plant>(draw(rng, 5)) : None;
  const auto a = static_cast<std::size_t>(draw(rng, n));
  auto b = static_cast<std::size_t>(draw(rng, n));
  if (n >= 2 && b == a) b = (a + 1) % n;
  const auto factor = 1 + static_cast<std::int64_t>(draw(rng, 3));
  std::vector<std::int64_t> extra(m), fresh(m);
  for (std::size_t j = 0; j < m; ++j) {
    extra[j] = randomEntry(rng, bounds.maxEntry);
    fresh[j] = 1 + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(bounds.maxEntry)));
  }

  auto applyPlant = [&] {
    for (std::size_t j = 0; j < m; ++j) {
      switch (plant) {
        case SameFans: t[b][j] = t[a][j] > 0 ? fresh[j] : 0; break;
        case Proportional: t[b][j] = factor * t[a][j]; break;
        case Dominating: t[b][j] = t[a][j] + extra[j]; break;
        case ZeroRow: t[b][j] = 0; break;
        case None: break;
      }
    }
  };
  // Repair silent columns through row a (or a random row without a plant);
  // the planted row is derived from row a, so two rounds always settle.
  for (int round = 0; round < 3; ++round) {
    applyPlant();
    bool repaired = false;
    for (std::size_t j = 0; j < m; ++j) {
      std::int64_t column = 0;
      for (std::size_t i = 0; i < n; ++i) column += t[i][j];
      if (column > 0) continue;
      const auto row = plant == None ? static_cast<std::size_t>(draw(rng, n)) : a;
      t[row][j] = 1 + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(bounds.maxEntry)));
      repaired = true;
    }
    if (!repaired) break;
  }
  return buildProblem(t);
}

Problem withEntry(const Problem& p, std::size_t i, std::size_t j, std::int64_t value) {
  auto t = p.matrix();
  t[i][j] = value;
  return buildProblem(p.artists(), p.users(), t);
}

Problem withColumn(const Problem& p, std::size_t j, const std::vector<std::int64_t>& column) {
  auto t = p.matrix();
  for (std::size_t i = 0; i < t.size(); ++i) t[i][j] = column[i];
  return buildProblem(p.artists(), p.users(), t);
}

constexpr std::int64_t kGridMaxEntry = 3;
constexpr std::size_t kExhaustiveUsers = 10;
constexpr int kSampledPartitions = 64;
constexpr int kSampledSubsets = 256;

// Calls visit(instance) for every instance of `axiom` derived from `p`, in a
// fixed order, until visit returns false.
template <typename Visit>
void forEachInstance(AxiomId axiom, const Problem& p, bool fromGrid, const SizeBounds& bounds,
                     Rng& rng, Visit&& visit) {
  const std::size_t n = p.artistCount();
  const std::size_t m = p.userCount();
  switch (axiom) {
    case AxiomId::Additivity: {
      if (m < 2) return;
      auto partition = [&](std::uint64_t mask) {
        std::vector<std::size_t> first{0};
        for (std::size_t j = 1; j < m; ++j) {
          if (mask >> (j - 1) & 1U) first.push_back(j);
        }
        return first;
      };
      if (m <= kExhaustiveUsers) {
        const std::uint64_t full = (std::uint64_t{1} << (m - 1)) - 1;
        for (std::uint64_t mask = 0; mask < full; ++mask) {
          if (!visit(UserPartition{p, partition(mask)})) return;
        }
      } else {
        for (int s = 0; s < kSampledPartitions; ++s) {
          auto first = partition(rng());
          if (first.size() == m) continue;
          if (!visit(UserPartition{p, std::move(first)})) return;
        }
      }
      return;
    }
    case AxiomId::ReasonableLowerBound: {
      auto subset = [&](std::uint64_t mask) {
        std::vector<std::size_t> c;
        for (std::size_t j = 0; j < m; ++j) {
          if (mask >> j & 1U) c.push_back(j);
        }
        return c;
      };
      if (m <= kExhaustiveUsers) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
          if (!visit(UserSubset{p, subset(mask)})) return;
        }
      } else {
        for (int s = 0; s < kSampledSubsets; ++s) {
          auto c = subset(rng());
          if (c.empty()) continue;
          if (!visit(UserSubset{p, std::move(c)})) return;
        }
      }
      return;
    }
    case AxiomId::EqualGlobalImpactUsers:
    case AxiomId::NullArtists:
      visit(SingleProblem{p});
      return;
    case AxiomId::SymmetryOnFans:
    case AxiomId::EqualImpactArtists:
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (!visit(ArtistPair{p, a, b})) return;
        }
      }
      return;
    case AxiomId::OrderPreservation:
    case AxiomId::PairwiseHomogeneity:
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b && !visit(ArtistPair{p, a, b})) return;
        }
      }
      return;
    case AxiomId::NonUnilateralManipulability: {
      for (std::size_t i = 0; i < n; ++i) {
        if (fromGrid) {
          // Single-entry raises; longer raises are chains of these.
          for (std::size_t j = 0; j < m; ++j) {
            const auto t = p.streams(i, j);
            if (t == 0) continue;
            for (auto v = t + 1; v <= kGridMaxEntry; ++v) {
              if (!visit(RowChange{p, withEntry(p, i, j, v), i})) return;
            }
          }
          continue;
        }
        for (int variant = 0; variant < 2; ++variant) {
          auto t = p.matrix();
          bool raised = false;
          std::vector<std::size_t> fans;
          for (std::size_t j = 0; j < m; ++j) {
            if (t[i][j] == 0) continue;
            fans.push_back(j);
            const auto add = static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(bounds.maxEntry) + 1));
            t[i][j] += add;
            raised = raised || add > 0;
          }
          if (fans.empty()) break;
          if (!raised) t[i][fans[draw(rng, fans.size())]] += 1;
          if (!visit(RowChange{p, buildProblem(p.artists(), p.users(), t), i})) return;
        }
      }
      return;
    }
    case AxiomId::ClickFraudProofness: {
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::int64_t> original(n);
        for (std::size_t i = 0; i < n; ++i) original[i] = p.streams(i, j);
        if (fromGrid) {
          std::vector<std::int64_t> column(n, 0);
          std::uint64_t combos = 1;
          for (std::size_t i = 0; i < n; ++i) combos *= kGridMaxEntry + 1;
          for (std::uint64_t code = 1; code < combos; ++code) {
            auto rest = code;
            for (std::size_t i = 0; i < n; ++i) {
              column[i] = static_cast<std::int64_t>(rest % (kGridMaxEntry + 1));
              rest /= kGridMaxEntry + 1;
            }
            if (column == original) continue;
            if (!visit(ColumnChange{p, withColumn(p, j, column), j})) return;
          }
          continue;
        }
        for (int variant = 0; variant < 3; ++variant) {
          std::vector<std::int64_t> column(n);
          std::int64_t total = 0;
          for (auto& v : column) {
            v = randomEntry(rng, bounds.maxEntry);
            total += v;
          }
          if (total == 0) column[draw(rng, n)] = bounds.maxEntry;
          if (column == original) continue;
          if (!visit(ColumnChange{p, withColumn(p, j, column), j})) return;
        }
      }
      return;
    }
  }
}

struct TrialResult {
  std::uint64_t checks = 0;
  std::uint64_t skipped = 0;
  std::optional<Witness> witness;
  std::exception_ptr error;

  bool stops() const { return witness.has_value() || error != nullptr; }
};

TrialResult runTrial(AxiomId axiom, const IndexKind& index, std::uint64_t trial,
                     const std::vector<Problem>& grid, std::uint64_t seed, const SizeBounds& bounds) {
  TrialResult result;
  try {
    Rng rng = trialRng(seed, axiom, trial);
    const bool fromGrid = trial < grid.size();
    const Problem p = fromGrid ? grid[trial] : randomProblem(rng, bounds);
    forEachInstance(axiom, p, fromGrid, bounds, rng, [&](AxiomInstance instance) {
      if (!reducedProblemsValid(axiom, instance)) {
        ++result.skipped;
        return true;
      }
      auto outcome = checkAxiomInstance(axiom, index, instance);
      if (outcome.vacuous) return true;
      ++result.checks;
      if (outcome.holds) return true;
      result.witness = Witness{trial, std::move(instance), std::move(outcome.detail)};
      return false;
    });
  } catch (...) {
    result.error = std::current_exception();
  }
  return result;
}

std::vector<Problem> buildGrid() {
  std::vector<Problem> grid;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      if (n * m > 6) continue;
      const std::size_t cells = n * m;
      std::uint64_t combos = 1;
      for (std::size_t c = 0; c < cells; ++c) combos *= kGridMaxEntry + 1;
      for (std::uint64_t code = 0; code < combos; ++code) {
        StreamMatrix t(n, std::vector<std::int64_t>(m));
        auto rest = code;
        // Most significant digit first, so codes enumerate matrices lexicographically.
        for (std::size_t c = cells; c-- > 0;) {
          t[c / m][c % m] = static_cast<std::int64_t>(rest % (kGridMaxEntry + 1));
          rest /= kGridMaxEntry + 1;
        }
        bool valid = true;
        for (std::size_t j = 0; j < m && valid; ++j) {
          std::int64_t column = 0;
          for (std::size_t i = 0; i < n; ++i) column += t[i][j];
          valid = column > 0;
        }
        if (valid) grid.push_back(buildProblem(t));
      }
    }
  }
  return grid;
}

}  // namespace

std::string_view axiomName(AxiomId axiom) {
  for (const auto& [id, name] : kAxiomNames) {
    if (id == axiom) return name;
  }
  return "unknown";
}

std::optional<AxiomId> parseAxiom(std::string_view name) {
  for (const auto& [id, n] : kAxiomNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

std::size_t instanceShape(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::EqualGlobalImpactUsers:
    case AxiomId::NullArtists:
      return 0;
    case AxiomId::Additivity: return 1;
    case AxiomId::ReasonableLowerBound: return 2;
    case AxiomId::SymmetryOnFans:
    case AxiomId::OrderPreservation:
    case AxiomId::EqualImpactArtists:
    case AxiomId::PairwiseHomogeneity:
      return 3;
    case AxiomId::NonUnilateralManipulability: return 4;
    case AxiomId::ClickFraudProofness: return 5;
  }
  return 0;
}

CheckOutcome checkAxiomInstance(AxiomId axiom, const IndexKind& index, const AxiomInstance& instance) {
  switch (axiom) {
    case AxiomId::Additivity:
      return checkAdditivity(index, expect<UserPartition>(instance, axiom));
    case AxiomId::ReasonableLowerBound:
      return checkLowerBound(index, expect<UserSubset>(instance, axiom));
    case AxiomId::EqualGlobalImpactUsers:
      return checkGlobalImpact(index, expect<SingleProblem>(instance, axiom));
    case AxiomId::SymmetryOnFans:
      return checkSymmetryOnFans(index, expect<ArtistPair>(instance, axiom));
    case AxiomId::OrderPreservation:
      return checkOrderPreservation(index, expect<ArtistPair>(instance, axiom));
    case AxiomId::NonUnilateralManipulability:
      return checkManipulability(index, expect<RowChange>(instance, axiom));
    case AxiomId::EqualImpactArtists:
      return checkEqualImpactArtists(index, expect<ArtistPair>(instance, axiom));
    case AxiomId::NullArtists:
      return checkNullArtists(index, expect<SingleProblem>(instance, axiom));
    case AxiomId::PairwiseHomogeneity:
      return checkPairwiseHomogeneity(index, expect<ArtistPair>(instance, axiom));
    case AxiomId::ClickFraudProofness:
      return checkClickFraud(index, expect<ColumnChange>(instance, axiom));
  }
  shapeError("unknown axiom");
}

bool reducedProblemsValid(AxiomId axiom, const AxiomInstance& instance) {
  if (axiom != AxiomId::EqualImpactArtists) return true;
  const auto* pair = std::get_if<ArtistPair>(&instance);
  if (pair == nullptr || pair->first == pair->second ||
      pair->first >= pair->problem.artistCount() || pair->second >= pair->problem.artistCount()) {
    return true;  // malformed; the check reports ShapeMismatch
  }
  return !removeArtist(pair->problem, pair->first).hasSilentUsers() &&
         !removeArtist(pair->problem, pair->second).hasSilentUsers();
}

const std::vector<Problem>& exhaustiveGrid() {
  static const std::vector<Problem> grid = buildGrid();
  return grid;
}

AxiomVerdict auditAxiom(AxiomId axiom, const IndexKind& index, std::uint64_t trials,
                        std::uint64_t seed, SizeBounds bounds, Execution exec) {
  if (trials == 0) throw Error(ErrorCode::Usage, "trials must be at least 1");
  if (bounds.maxArtists == 0 || bounds.maxUsers == 0 || bounds.maxEntry < 1) {
    throw Error(ErrorCode::Usage, "size bounds must allow at least a 1x1 problem with a positive entry");
  }

  static const std::vector<Problem> noGrid;
  const auto& grid = bounds.exhaustiveGrid ? exhaustiveGrid() : noGrid;
  const auto total = static_cast<std::int64_t>(grid.size() + trials);
  std::vector<TrialResult> results(static_cast<std::size_t>(total));

  if (exec == Execution::Parallel) {
    std::int64_t firstStop = total;
#pragma omp parallel for schedule(dynamic, 8) shared(firstStop)
    for (std::int64_t k = 0; k < total; ++k) {
      std::int64_t stop;
#pragma omp atomic read
      stop = firstStop;
      if (k > stop) continue;
      auto& r = results[static_cast<std::size_t>(k)];
      r = runTrial(axiom, index, static_cast<std::uint64_t>(k), grid, seed, bounds);
      if (r.stops()) {
#pragma omp critical(streamshare_audit_stop)
        firstStop = std::min(firstStop, k);
      }
    }
  } else {
    for (std::int64_t k = 0; k < total; ++k) {
      auto& r = results[static_cast<std::size_t>(k)];
      r = runTrial(axiom, index, static_cast<std::uint64_t>(k), grid, seed, bounds);
      if (r.stops()) break;
    }
  }

  AxiomVerdict verdict;
  verdict.axiom = axiom;
  verdict.index = index;
  verdict.seed = seed;
  for (std::int64_t k = 0; k < total; ++k) {
    auto& r = results[static_cast<std::size_t>(k)];
    verdict.trials += 1;
    if (static_cast<std::size_t>(k) < grid.size()) verdict.gridTrials += 1;
    verdict.checks += r.checks;
    verdict.skipped += r.skipped;
    if (r.error) std::rethrow_exception(r.error);
    if (r.witness) {
      verdict.outcome = Outcome::Counterexample;
      verdict.witness = std::move(r.witness);
      break;
    }
  }
  return verdict;
}

bool replayWitness(const AxiomVerdict& verdict) {
  if (!verdict.witness) return false;
  const auto again = checkAxiomInstance(verdict.axiom, verdict.index, verdict.witness->instance);
  return !again.holds && !again.vacuous && again.detail == verdict.witness->detail;
}

std::optional<bool> tableExpectation(AxiomId axiom, IndexTag index) {
  // {shapley, proRata, userCentric}
  auto row = [&]() -> std::array<bool, 3> {
    switch (axiom) {
      case AxiomId::Additivity: return {true, true, true};
      case AxiomId::ReasonableLowerBound: return {true, false, true};
      case AxiomId::EqualGlobalImpactUsers: return {true, false, true};
      case AxiomId::SymmetryOnFans: return {true, false, false};
      case AxiomId::OrderPreservation: return {true, true, true};
      case AxiomId::NonUnilateralManipulability: return {true, false, false};
      case AxiomId::NullArtists: return {true, true, true};
      case AxiomId::EqualImpactArtists: return {true, true, false};
      case AxiomId::PairwiseHomogeneity: return {false, true, true};
      case AxiomId::ClickFraudProofness: return {true, false, true};
    }
    return {};
  }();
  switch (index) {
    case IndexTag::Shapley: return row[0];
    case IndexTag::ProRata: return row[1];
    case IndexTag::UserCentric: return row[2];
    default: return std::nullopt;
  }
}

bool TableReport::allMatch() const {
  return std::ranges::all_of(cells, [](const TableCell& c) { return c.matches(); });
}

TableReport reproduceTable1(std::uint64_t trials, std::uint64_t seed, SizeBounds bounds, Execution exec) {
  TableReport report;
  report.trials = trials;
  report.seed = seed;
  for (auto axiom : kAllAxioms) {
    for (auto tag : kTableIndices) {
      TableCell cell;
      cell.verdict = auditAxiom(axiom, IndexKind::of(tag), trials, seed, bounds, exec);
      cell.expectedHolds = *tableExpectation(axiom, tag);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

void requireTableMatch(const TableReport& report) {
  for (const auto& cell : report.cells) {
    if (cell.matches()) continue;
    const auto& v = cell.verdict;
    std::string what = std::string(axiomName(v.axiom)) + " / " + v.index.name() + ": expected " +
                       (cell.expectedHolds ? "Yes" : "No") + ", ";
    what += v.witness ? "found counterexample: " + v.witness->detail
                      : "no counterexample in " + std::to_string(v.trials) + " trials";
    throw Error(ErrorCode::TableMismatch, what);
  }
}

const std::vector<AxiomSystem>& characterizations() {
  using A = AxiomId;
  using I = IndexTag;
  static const std::vector<AxiomSystem> systems{
      {"symmetry",
       {A::Additivity, A::ReasonableLowerBound, A::EqualGlobalImpactUsers, A::SymmetryOnFans},
       {{I::I1, A::Additivity},
        {I::I2, A::ReasonableLowerBound},
        {I::I3, A::EqualGlobalImpactUsers},
        {I::UserCentric, A::SymmetryOnFans}}},
      {"order",
       {A::Additivity, A::ReasonableLowerBound, A::EqualGlobalImpactUsers, A::OrderPreservation,
        A::NonUnilateralManipulability},
       {{I::I1, A::Additivity},
        {I::I2, A::ReasonableLowerBound},
        {I::I3, A::EqualGlobalImpactUsers},
        {I::I4, A::OrderPreservation},
        {I::UserCentric, A::NonUnilateralManipulability}}},
      {"artistImpact",
       {A::Additivity, A::ReasonableLowerBound, A::EqualGlobalImpactUsers, A::EqualImpactArtists},
       {{I::I1, A::Additivity},
        {I::I2, A::ReasonableLowerBound},
        {I::I3, A::EqualGlobalImpactUsers},
        {I::UserCentric, A::EqualImpactArtists}}},
      // Null artists in place of the lower bound; only the Shapley side is checked.
      {"symmetry/null",
       {A::Additivity, A::NullArtists, A::EqualGlobalImpactUsers, A::SymmetryOnFans},
       {}},
      {"order/null",
       {A::Additivity, A::NullArtists, A::EqualGlobalImpactUsers, A::OrderPreservation,
        A::NonUnilateralManipulability},
       {}},
      {"artistImpact/null",
       {A::Additivity, A::NullArtists, A::EqualGlobalImpactUsers, A::EqualImpactArtists},
       {}},
  };
  return systems;
}

bool IndependenceReport::allMatch() const {
  return std::ranges::all_of(claims, [](const IndependenceClaim& c) { return c.matches(); });
}

IndependenceReport independenceSuite(std::uint64_t trials, std::uint64_t seed, SizeBounds bounds,
                                     Execution exec) {
  IndependenceReport report;
  report.trials = trials;
  report.seed = seed;

  // Audits are deterministic, so each (index, axiom) pair is run once.
  std::vector<std::pair<std::pair<IndexTag, AxiomId>, AxiomVerdict>> cache;
  auto verdictFor = [&](IndexTag tag, AxiomId axiom) -> const AxiomVerdict& {
    for (const auto& [key, verdict] : cache) {
      if (key == std::pair{tag, axiom}) return verdict;
    }
    cache.emplace_back(std::pair{tag, axiom}, auditAxiom(axiom, IndexKind::of(tag), trials, seed, bounds, exec));
    return cache.back().second;
  };

  for (const auto& system : characterizations()) {
    for (auto axiom : system.axioms) {
      report.claims.push_back({system.name, IndexTag::Shapley, axiom, true, verdictFor(IndexTag::Shapley, axiom)});
    }
    for (const auto& [tag, breaks] : system.independence) {
      for (auto axiom : system.axioms) {
        report.claims.push_back({system.name, tag, axiom, axiom != breaks, verdictFor(tag, axiom)});
      }
    }
  }
  return report;
}

void requireClaimsMatch(const IndependenceReport& report) {
  for (const auto& claim : report.claims) {
    if (claim.matches()) continue;
    const auto& v = claim.verdict;
    std::string what = claim.system + ": " + std::string(indexName(claim.index)) + " should " +
                       (claim.expectedHolds ? "satisfy " : "violate ") +
                       std::string(axiomName(claim.axiom)) + ", ";
    what += v.witness ? "counterexample: " + v.witness->detail
                      : "no counterexample in " + std::to_string(v.trials) + " trials";
    throw Error(ErrorCode::ClaimMismatch, what);
  }
}

}  // namespace streamshare
