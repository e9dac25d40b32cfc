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

// Serial reference versus OpenMP path for every kernel. Each row times both
// paths on the same input and checks that they agree exactly.
//
//   bench_kernels            full sizes
//   bench_kernels --quick    small sizes (used as a smoke test)

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>

#include "streamshare/axioms.hpp"
#include "streamshare/coopgame.hpp"

using namespace streamshare;

namespace {

Problem randomProblem(unsigned n, unsigned m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(0, 4);
  StreamMatrix t(n, std::vector<std::int64_t>(m));
  for (auto& row : t) {
    for (auto& x : row) x = entry(rng) == 0 ? 1 + entry(rng) : 0;
  }
  for (unsigned j = 0; j < m; ++j) t[j % n][j] += 1;  // nobody is silent
  return buildProblem(t);
}

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool failed = false;

template <typename T>
void row(const char* name, const std::function<T(Execution)>& run) {
  T serial, parallel;
  const double ts = seconds([&] { serial = run(Execution::Serial); });
  const double tp = seconds([&] { parallel = run(Execution::Parallel); });
  const bool same = serial == parallel;
  failed |= !same;
  std::printf("%-40s %10.4f %10.4f %8.2fx  %s\n", name, ts, tp, tp > 0 ? ts / tp : 0.0,
              same ? "equal" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const unsigned gameN = quick ? 10 : 18;
  const unsigned permN = quick ? 6 : 9;
  const unsigned subsetN = quick ? 8 : 14;
  const std::uint64_t trials = quick ? 20 : 500;
  SizeBounds bounds;
  bounds.exhaustiveGrid = !quick;

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-40s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  const auto big = randomProblem(gameN, 4 * gameN, 1);
  row<std::vector<Rational>>("pessimistic worth",
                             [&](Execution e) { return pessimisticGame(big, {}, e).table(); });
  row<std::vector<Rational>>("optimistic worth",
                             [&](Execution e) { return optimisticGame(big, {}, e).table(); });
  const auto pess = pessimisticGame(big);
  row<std::vector<Rational>>("dual worth", [&](Execution e) { return dualGame(pess, e).table(); });

  const auto perm = pessimisticGame(randomProblem(permN, 3 * permN, 2));
  row<std::vector<Rational>>("permutation Shapley", [&](Execution e) {
    return shapleyValueBruteForce(perm, ShapleyMode::Permutation, {}, e).values;
  });
  const auto sub = pessimisticGame(randomProblem(subsetN, 3 * subsetN, 3));
  row<std::vector<Rational>>("subset-weighted Shapley", [&](Execution e) {
    return shapleyValueBruteForce(sub, ShapleyMode::SubsetWeighted, {}, e).values;
  });

  for (auto axiom : {AxiomId::Additivity, AxiomId::ClickFraudProofness}) {
    const std::string name = "audit " + std::string(axiomName(axiom)) + "/userCentric";
    row<std::string>(name.c_str(), [&](Execution e) {
      const auto v = auditAxiom(axiom, IndexKind::of(IndexTag::UserCentric), trials, 7, bounds, e);
      return std::to_string(v.holds()) + ":" + std::to_string(v.trials) + ":" + std::to_string(v.checks);
    });
  }

  std::printf("sizes: game n=%u, permutation n=%u, subset n=%u, audit trials=%llu\n", gameN, permN,
              subsetN, static_cast<unsigned long long>(trials));
  return failed ? 1 : 0;
}
