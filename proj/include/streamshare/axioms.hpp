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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "streamshare/indices.hpp"
#include "streamshare/kernels.hpp"
#include "streamshare/problem.hpp"

// Executable axioms for popularity indices.
//
// Every axiom is a universally quantified (in)equality over problems. An
// *instance* fixes the quantified objects (a problem, a user partition, a pair
// of artists, ...) and checkAxiomInstance() evaluates the condition exactly.
// auditAxiom() searches for a violating instance: first over an exhaustive
// grid of small matrices, then over seeded random trials.

namespace streamshare {

enum class AxiomId {
  Additivity,
  ReasonableLowerBound,
  EqualGlobalImpactUsers,
  SymmetryOnFans,
  OrderPreservation,
  NonUnilateralManipulability,
  EqualImpactArtists,
  NullArtists,
  PairwiseHomogeneity,
  ClickFraudProofness,
};

inline constexpr std::array<AxiomId, 10> kAllAxioms{
    AxiomId::Additivity,
    AxiomId::ReasonableLowerBound,
    AxiomId::EqualGlobalImpactUsers,
    AxiomId::SymmetryOnFans,
    AxiomId::OrderPreservation,
    AxiomId::NonUnilateralManipulability,
    AxiomId::NullArtists,
    AxiomId::EqualImpactArtists,
    AxiomId::PairwiseHomogeneity,
    AxiomId::ClickFraudProofness,
};

std::string_view axiomName(AxiomId axiom);
std::optional<AxiomId> parseAxiom(std::string_view name);

// Instance shapes. Positions refer to the canonical artist/user order.

/// Equal global impact of users, null artists.
struct SingleProblem {
  Problem problem;
};
/// Additivity: `firstPart` are the users of M1, the rest form M2.
struct UserPartition {
  Problem problem;
  std::vector<std::size_t> firstPart;
};
/// Reasonable lower bound: the user set C.
struct UserSubset {
  Problem problem;
  std::vector<std::size_t> coalition;
};
/// Symmetry on fans, order preservation, equal impact of artists, pairwise homogeneity.
struct ArtistPair {
  Problem problem;
  std::size_t first = 0;
  std::size_t second = 0;
};
/// Non-unilateral manipulability: `after` raises some of artist's counts.
struct RowChange {
  Problem before;
  Problem after;
  std::size_t artist = 0;
};
/// Click-fraud-proofness: `after` differs from `before` in one user column.
struct ColumnChange {
  Problem before;
  Problem after;
  std::size_t user = 0;
};

using AxiomInstance =
    std::variant<SingleProblem, UserPartition, UserSubset, ArtistPair, RowChange, ColumnChange>;

/// Index into AxiomInstance of the alternative an axiom expects.
std::size_t instanceShape(AxiomId axiom);

struct CheckOutcome {
  bool holds = true;
  bool vacuous = false;  // the axiom's hypothesis does not apply to this instance
  std::string detail;    // nonempty for violations

  bool operator==(const CheckOutcome&) const = default;
};

/// Exact evaluation of one axiom on one instance.
/// Errors: ShapeMismatch (wrong alternative, or a malformed pair of problems),
/// InvalidReducedProblem (equal impact of artists where removing an artist
/// silences a user).
CheckOutcome checkAxiomInstance(AxiomId axiom, const IndexKind& index, const AxiomInstance& instance);

/// False exactly when checkAxiomInstance would throw InvalidReducedProblem.
bool reducedProblemsValid(AxiomId axiom, const AxiomInstance& instance);

struct SizeBounds {
  unsigned maxArtists = 6;
  unsigned maxUsers = 6;
  std::int64_t maxEntry = 5;
  bool exhaustiveGrid = true;
};

/// All matrices with entries in {0..3} and n, m <= 4, n*m <= 6 that form
/// valid problems, in canonical order (shape by n then m, then lexicographic).
const std::vector<Problem>& exhaustiveGrid();

enum class Outcome { HoldsOnAllTrials, Counterexample };

struct Witness {
  std::uint64_t trial = 0;  // position in the trial stream (grid first)
  AxiomInstance instance;
  std::string detail;
};

struct AxiomVerdict {
  AxiomId axiom{};
  IndexKind index;
  Outcome outcome = Outcome::HoldsOnAllTrials;
  std::optional<Witness> witness;
  std::uint64_t trials = 0;       // problems examined (grid + random)
  std::uint64_t gridTrials = 0;   // of which from the exhaustive grid
  std::uint64_t checks = 0;       // non-vacuous instances evaluated
  std::uint64_t skipped = 0;      // instances with an invalid reduced problem
  std::uint64_t seed = 0;

  bool holds() const noexcept { return outcome == Outcome::HoldsOnAllTrials; }
};

/// Searches `trials` random problems (after the grid, when enabled). The
/// lowest-index violating trial wins, so the verdict does not depend on the
/// thread count. Errors: Usage (trials == 0, empty bounds), plus anything
/// checkAxiomInstance raises.
AxiomVerdict auditAxiom(AxiomId axiom, const IndexKind& index, std::uint64_t trials,
                        std::uint64_t seed, SizeBounds bounds = {},
                        Execution exec = Execution::Parallel);

/// Re-runs the check on a stored witness; true when it reproduces the
/// violation with the identical detail.
bool replayWitness(const AxiomVerdict& verdict);

// ---- the rules-versus-axioms table -----------------------------------------

inline constexpr std::array<IndexTag, 3> kTableIndices{IndexTag::Shapley, IndexTag::ProRata,
                                                       IndexTag::UserCentric};

/// Published Yes/No for the three payout indices; nullopt for other indices.
std::optional<bool> tableExpectation(AxiomId axiom, IndexTag index);

struct TableCell {
  AxiomVerdict verdict;
  bool expectedHolds = false;

  bool matches() const noexcept { return verdict.holds() == expectedHolds; }
};

struct TableReport {
  std::vector<TableCell> cells;  // axiom-major, indices in kTableIndices order
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  bool allMatch() const;
};

TableReport reproduceTable1(std::uint64_t trials, std::uint64_t seed, SizeBounds bounds = {},
                            Execution exec = Execution::Parallel);

/// Throws TableMismatch naming the first disagreeing cell.
void requireTableMatch(const TableReport& report);

// ---- characterizations and independence ------------------------------------

/// A set of axioms that singles out the Shapley index, together with, for
/// each alternative index, the one axiom of the set it is supposed to break.
struct AxiomSystem {
  std::string name;
  std::vector<AxiomId> axioms;
  std::vector<std::pair<IndexTag, AxiomId>> independence;
};

const std::vector<AxiomSystem>& characterizations();

struct IndependenceClaim {
  std::string system;
  IndexTag index{};
  AxiomId axiom{};
  bool expectedHolds = false;
  AxiomVerdict verdict;

  bool matches() const noexcept { return verdict.holds() == expectedHolds; }
};

struct IndependenceReport {
  std::vector<IndependenceClaim> claims;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  bool allMatch() const;
};

/// For every system: the Shapley index satisfies all of its axioms, and each
/// listed alternative breaks exactly its designated axiom.
IndependenceReport independenceSuite(std::uint64_t trials, std::uint64_t seed,
                                     SizeBounds bounds = {}, Execution exec = Execution::Parallel);

/// Throws ClaimMismatch naming the first disagreeing claim.
void requireClaimsMatch(const IndependenceReport& report);

}  // namespace streamshare
