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
#include "streamshare/axioms.hpp"
#include "streamshare/error.hpp"
#include "streamshare/io.hpp"
#include "support.hpp"

using namespace streamshare;

namespace {

IndexKind kind(IndexTag tag) { return IndexKind::of(tag); }

}  // namespace

TEST_CASE("names round-trip") {
  for (auto a : kAllAxioms) {
    CHECK(parseAxiom(axiomName(a)) == a);
  }
  CHECK_FALSE(parseAxiom("fairness").has_value());
}

TEST_CASE("single instances") {
  const auto ex2 = buildProblem(testing::example2());
  const auto sof = checkAxiomInstance(AxiomId::SymmetryOnFans, kind(IndexTag::ProRata), ArtistPair{ex2, 0, 1});
  CHECK_FALSE(sof.holds);
  CHECK(sof.detail.find("300") != std::string::npos);
  CHECK(sof.detail.find("600") != std::string::npos);

  const auto null = checkAxiomInstance(AxiomId::NullArtists, kind(IndexTag::Shapley),
                                       SingleProblem{buildProblem({{1}, {0}})});
  CHECK(null.holds);

  const auto rlb = checkAxiomInstance(AxiomId::ReasonableLowerBound, kind(IndexTag::ProRata),
                                      UserSubset{buildProblem({{1, 0}, {0, 100}}), {0}});
  CHECK_FALSE(rlb.holds);
  CHECK(rlb.detail.find("2/101") != std::string::npos);

  const auto ph = checkAxiomInstance(AxiomId::PairwiseHomogeneity, kind(IndexTag::Shapley), ArtistPair{ex2, 0, 1});
  CHECK_FALSE(ph.holds);
  CHECK(checkAxiomInstance(AxiomId::PairwiseHomogeneity, kind(IndexTag::ProRata), ArtistPair{ex2, 0, 1}).holds);
}

TEST_CASE("malformed instances") {
  const auto ex1 = buildProblem(testing::example1());
  try {
    checkAxiomInstance(AxiomId::Additivity, kind(IndexTag::Shapley), SingleProblem{ex1});
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
  const ArtistPair pair{ex1, 0, 1};
  CHECK_FALSE(reducedProblemsValid(AxiomId::EqualImpactArtists, pair));
  try {
    checkAxiomInstance(AxiomId::EqualImpactArtists, kind(IndexTag::Shapley), pair);
    FAIL("expected InvalidReducedProblem");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidReducedProblem);
  }
}

TEST_CASE("audits with known outcomes") {
  const auto egiu = auditAxiom(AxiomId::EqualGlobalImpactUsers, kind(IndexTag::ProRata), 1000, 42);
  CHECK_FALSE(egiu.holds());
  CHECK(replayWitness(egiu));

  const auto add = auditAxiom(AxiomId::Additivity, kind(IndexTag::Shapley), 1000, 42);
  CHECK(add.holds());
  CHECK(add.trials == 1000 + add.gridTrials);
  CHECK(add.gridTrials == exhaustiveGrid().size());

  const auto ph = auditAxiom(AxiomId::PairwiseHomogeneity, kind(IndexTag::Shapley), 1000, 42);
  CHECK_FALSE(ph.holds());
  REQUIRE(ph.witness.has_value());
  CHECK(replayWitness(ph));
  const auto& w = std::get<ArtistPair>(ph.witness->instance);
  // The witness rows are proportional.
  for (std::size_t j = 0; j < w.problem.userCount(); ++j) {
    for (std::size_t k = 0; k < w.problem.userCount(); ++k) {
      CHECK(w.problem.streams(w.second, j) * w.problem.streams(w.first, k) ==
            w.problem.streams(w.second, k) * w.problem.streams(w.first, j));
    }
  }

  const auto i2 = auditAxiom(AxiomId::ReasonableLowerBound, kind(IndexTag::I2), 200, 42);
  CHECK_FALSE(i2.holds());
  CHECK(auditAxiom(AxiomId::SymmetryOnFans, kind(IndexTag::I1), 200, 42).holds());
  const auto i3 = auditAxiom(AxiomId::EqualGlobalImpactUsers, kind(IndexTag::I3), 200, 42);
  CHECK_FALSE(i3.holds());
  CHECK(replayWitness(i3));
}

TEST_CASE("grid is canonical and valid") {
  const auto& grid = exhaustiveGrid();
  CHECK(grid.size() > 1000);
  CHECK(&grid == &exhaustiveGrid());
  for (const auto& p : grid) {
    CHECK(p.artistCount() * p.userCount() <= 6);
    CHECK(p.artistCount() <= 4);
    CHECK(p.userCount() <= 4);
  }
}

TEST_CASE("audits are thread-count independent") {
  for (auto axiom : {AxiomId::SymmetryOnFans, AxiomId::NonUnilateralManipulability, AxiomId::Additivity}) {
    for (auto tag : {IndexTag::Shapley, IndexTag::UserCentric}) {
      const auto s = auditAxiom(axiom, kind(tag), 100, 7, {}, Execution::Serial);
      const auto p = auditAxiom(axiom, kind(tag), 100, 7, {}, Execution::Parallel);
      CHECK(verdictJson(s).dump() == verdictJson(p).dump());
    }
  }
}

TEST_CASE("every witness replays") {
  for (auto axiom : kAllAxioms) {
    for (auto tag : kTableIndices) {
      const auto v = auditAxiom(axiom, kind(tag), 60, 5);
      if (!v.holds()) CHECK_MESSAGE(replayWitness(v), axiomName(axiom), "/", indexName(tag));
    }
  }
}

TEST_CASE("shapley satisfies every axiom but pairwise homogeneity on random problems") {
  SizeBounds bounds;
  bounds.exhaustiveGrid = false;
  for (auto axiom : kAllAxioms) {
    const auto v = auditAxiom(axiom, kind(IndexTag::Shapley), 150, 99, bounds);
    CHECK_MESSAGE(v.holds() == (axiom != AxiomId::PairwiseHomogeneity), axiomName(axiom));
  }
}

TEST_CASE("removing any user leaves shapley total m - 1") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = testing::randomProblem(rng, 6, 6, 5);
    if (p.userCount() < 2) continue;
    for (std::size_t j = 0; j < p.userCount(); ++j) {
      CHECK(shapleyIndex(removeUser(p, j)).total() == static_cast<long>(p.userCount() - 1));
    }
  }
}

TEST_CASE("table expectations") {
  int shapleyYes = 0;
  std::vector<AxiomId> proRataYes;
  for (auto a : kAllAxioms) {
    shapleyYes += *tableExpectation(a, IndexTag::Shapley) ? 1 : 0;
    if (*tableExpectation(a, IndexTag::ProRata)) proRataYes.push_back(a);
  }
  CHECK(shapleyYes == 9);
  CHECK_FALSE(*tableExpectation(AxiomId::PairwiseHomogeneity, IndexTag::Shapley));
  CHECK(proRataYes == std::vector<AxiomId>{AxiomId::Additivity, AxiomId::OrderPreservation, AxiomId::NullArtists,
                                           AxiomId::EqualImpactArtists, AxiomId::PairwiseHomogeneity});
  CHECK_FALSE(tableExpectation(AxiomId::Additivity, IndexTag::I1).has_value());
}

TEST_CASE("reduced table run") {
  const auto table = reproduceTable1(40, 42);
  CHECK(table.cells.size() == 30);
  CHECK(table.allMatch());
  CHECK_NOTHROW(requireTableMatch(table));
  for (const auto& cell : table.cells) {
    if (!cell.verdict.holds()) CHECK(replayWitness(cell.verdict));
  }
}

TEST_CASE("characterizations name one broken axiom per alternative") {
  for (const auto& system : characterizations()) {
    for (const auto& [tag, axiom] : system.independence) {
      CHECK(std::find(system.axioms.begin(), system.axioms.end(), axiom) != system.axioms.end());
      CHECK(tag != IndexTag::Shapley);
    }
  }
}
