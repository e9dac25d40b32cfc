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

// Test-side helpers: seeded problem generators and naive oracles written
// straight from the definitions, sharing no code with the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "streamshare/problem.hpp"
#include "streamshare/rational.hpp"

namespace testing {

using streamshare::Problem;
using streamshare::Rational;
using streamshare::StreamMatrix;

inline StreamMatrix example1() { return {{200, 0, 0}, {0, 100, 100}}; }
inline StreamMatrix example2() { return {{100, 100, 100}, {200, 200, 200}}; }

/// Sparse random matrix with n rows, m columns, entries in [0, maxEntry] and
/// no all-zero column.
inline StreamMatrix randomMatrix(std::mt19937_64& rng, std::size_t n, std::size_t m, std::int64_t maxEntry) {
  std::uniform_int_distribution<std::int64_t> entry(1, maxEntry);
  std::bernoulli_distribution present(0.45);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  StreamMatrix t(n, std::vector<std::int64_t>(m, 0));
  for (auto& row : t) {
    for (auto& x : row) x = present(rng) ? entry(rng) : 0;
  }
  for (std::size_t j = 0; j < m; ++j) {
    bool silent = true;
    for (std::size_t i = 0; i < n; ++i) silent &= t[i][j] == 0;
    if (silent) t[pick(rng)][j] = entry(rng);
  }
  return t;
}

inline Problem randomProblem(std::mt19937_64& rng, std::size_t maxN, std::size_t maxM, std::int64_t maxEntry) {
  std::uniform_int_distribution<std::size_t> n(1, maxN), m(1, maxM);
  return streamshare::buildProblem(randomMatrix(rng, n(rng), m(rng), maxEntry));
}

inline std::set<std::size_t> listOf(const StreamMatrix& t, std::size_t j) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i][j] > 0) out.insert(i);
  }
  return out;
}

/// Equal split of each user's unit among the artists they streamed.
inline std::vector<Rational> naiveShapley(const StreamMatrix& t) {
  std::vector<Rational> out(t.size(), 0);
  for (std::size_t j = 0; j < t.front().size(); ++j) {
    const auto list = listOf(t, j);
    for (auto i : list) out[i] += Rational(1) / Rational(static_cast<long>(list.size()));
  }
  return out;
}

/// Proportional split of each user's unit.
inline std::vector<Rational> naiveUserCentric(const StreamMatrix& t) {
  std::vector<Rational> out(t.size(), 0);
  for (std::size_t j = 0; j < t.front().size(); ++j) {
    long total = 0;
    for (const auto& row : t) total += static_cast<long>(row[j]);
    for (std::size_t i = 0; i < t.size(); ++i) {
      out[i] += Rational(static_cast<long>(t[i][j])) / Rational(total);
    }
  }
  return out;
}

inline std::set<std::size_t> coalitionOf(std::uint32_t mask, std::size_t n) {
  std::set<std::size_t> s;
  for (std::size_t k = 0; k < n; ++k) {
    if (mask >> k & 1U) s.insert(k);
  }
  return s;
}

/// Users whose whole list is inside S.
inline long naivePessimistic(const StreamMatrix& t, const std::set<std::size_t>& s) {
  long count = 0;
  for (std::size_t j = 0; j < t.front().size(); ++j) {
    const auto list = listOf(t, j);
    count += std::includes(s.begin(), s.end(), list.begin(), list.end()) ? 1 : 0;
  }
  return count;
}

/// Users who streamed some artist in S.
inline long naiveOptimistic(const StreamMatrix& t, const std::set<std::size_t>& s) {
  long count = 0;
  for (std::size_t j = 0; j < t.front().size(); ++j) {
    const auto list = listOf(t, j);
    count += std::any_of(list.begin(), list.end(), [&](auto i) { return s.count(i) > 0; }) ? 1 : 0;
  }
  return count;
}

}  // namespace testing
