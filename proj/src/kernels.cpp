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

#include "streamshare/kernels.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace streamshare::kernels {

namespace {

std::int64_t tableSize(unsigned n) { return std::int64_t{1} << n; }

mpz_class factorial(unsigned k) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

template <typename Pred>
std::vector<std::int64_t> countUsers(std::span<const Mask> listMasks, unsigned n, Execution exec,
                                     Pred counts) {
  const std::int64_t size = tableSize(n);
  std::vector<std::int64_t> worth(static_cast<std::size_t>(size), 0);
  auto fill = [&](std::int64_t s) {
    const auto coalition = static_cast<Mask>(s);
    std::int64_t c = 0;
    for (auto list : listMasks) c += counts(list, coalition) ? 1 : 0;
    worth[static_cast<std::size_t>(s)] = c;
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < size; ++s) fill(s);
  } else {
    for (std::int64_t s = 0; s < size; ++s) fill(s);
  }
  return worth;
}

// Marginal contributions summed over every order that starts with `first`.
void accumulateOrdersStartingWith(std::span<const Rational> worth, unsigned n, unsigned first,
                                  std::vector<Rational>& acc) {
  std::vector<unsigned> rest;
  for (unsigned k = 0; k < n; ++k) {
    if (k != first) rest.push_back(k);
  }
  const Rational& firstGain = worth[Mask{1} << first];  // v({first}) - v(empty)
  Rational firstTotal = 0;
  do {
    firstTotal += firstGain;
    Mask pre = Mask{1} << first;
    for (auto player : rest) {
      const Mask with = pre | (Mask{1} << player);
      acc[player] += worth[with];
      acc[player] -= worth[pre];
      pre = with;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  acc[first] += firstTotal;
}

}  // namespace

std::vector<std::int64_t> pessimisticWorth(std::span<const Mask> listMasks, unsigned n,
                                           Execution exec) {
  return countUsers(listMasks, n, exec,
                    [](Mask list, Mask coalition) { return (list & ~coalition) == 0; });
}

std::vector<std::int64_t> optimisticWorth(std::span<const Mask> listMasks, unsigned n,
                                          Execution exec) {
  return countUsers(listMasks, n, exec,
                    [](Mask list, Mask coalition) { return (list & coalition) != 0; });
}

std::vector<Rational> dualWorth(std::span<const Rational> worth, unsigned n, Execution exec) {
  const std::int64_t size = tableSize(n);
  const auto grand = static_cast<Mask>(size - 1);
  std::vector<Rational> dual(static_cast<std::size_t>(size));
  auto fill = [&](std::int64_t s) {
    const auto coalition = static_cast<Mask>(s);
    dual[coalition] = worth[grand] - worth[grand & ~coalition];
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < size; ++s) fill(s);
  } else {
    for (std::int64_t s = 0; s < size; ++s) fill(s);
  }
  return dual;
}

std::vector<Rational> permutationShapley(std::span<const Rational> worth, unsigned n,
                                         Execution exec) {
  std::vector<std::vector<Rational>> partial(n, std::vector<Rational>(n, Rational(0)));
  const int firsts = static_cast<int>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int f = 0; f < firsts; ++f) {
      accumulateOrdersStartingWith(worth, n, static_cast<unsigned>(f), partial[f]);
    }
  } else {
    for (int f = 0; f < firsts; ++f) {
      accumulateOrdersStartingWith(worth, n, static_cast<unsigned>(f), partial[f]);
    }
  }

  // Reduce in a fixed order.
  std::vector<Rational> value(n, Rational(0));
  for (const auto& chunk : partial) {
    for (unsigned i = 0; i < n; ++i) value[i] += chunk[i];
  }
  const Rational orders(factorial(n));
  for (auto& v : value) v /= orders;
  return value;
}

std::vector<Rational> subsetWeightedShapley(std::span<const Rational> worth, unsigned n,
                                            Execution exec) {
  // weight[s] = s!(n-s-1)!/n!
  std::vector<Rational> weight(n);
  const mpz_class nFact = factorial(n);
  for (unsigned s = 0; s < n; ++s) {
    weight[s] = Rational(factorial(s) * factorial(n - s - 1), nFact);
    weight[s].canonicalize();
  }

  std::vector<Rational> value(n, Rational(0));
  const std::int64_t size = tableSize(n);
  auto player = [&](int i) {
    const Mask bit = Mask{1} << i;
    std::vector<Rational> bySize(n, Rational(0));
    for (std::int64_t s = 0; s < size; ++s) {
      const auto coalition = static_cast<Mask>(s);
      if (coalition & bit) continue;
      auto& slot = bySize[static_cast<std::size_t>(std::popcount(coalition))];
      slot += worth[coalition | bit];
      slot -= worth[coalition];
    }
    Rational total = 0;
    for (unsigned k = 0; k < n; ++k) total += bySize[k] * weight[k];
    value[static_cast<std::size_t>(i)] = total;
  };
  const int players = static_cast<int>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < players; ++i) player(i);
  } else {
    for (int i = 0; i < players; ++i) player(i);
  }
  return value;
}

}  // namespace streamshare::kernels
