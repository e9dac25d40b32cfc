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
#include <span>
#include <vector>

#include "streamshare/rational.hpp"

// Data-parallel inner loops behind the coalition-game module. Each kernel has
// an OpenMP path and a plain serial path; the serial path is the reference the
// tests compare against, and bench/ times one against the other.
//
// Coalitions are bitmasks over player positions, bit k = player k.

namespace streamshare {

enum class Execution { Serial, Parallel };

namespace kernels {

using Mask = std::uint32_t;

/// worth[S] = #{ j : listMasks[j] subset of S }.
std::vector<std::int64_t> pessimisticWorth(std::span<const Mask> listMasks, unsigned n,
                                           Execution exec = Execution::Parallel);

/// worth[S] = #{ j : listMasks[j] intersects S }.
std::vector<std::int64_t> optimisticWorth(std::span<const Mask> listMasks, unsigned n,
                                          Execution exec = Execution::Parallel);

/// dual[S] = worth[N] - worth[N \ S].
std::vector<Rational> dualWorth(std::span<const Rational> worth, unsigned n,
                                Execution exec = Execution::Parallel);

/// Average marginal contribution over all n! player orders. Parallel path
/// splits the orders by their first player.
std::vector<Rational> permutationShapley(std::span<const Rational> worth, unsigned n,
                                         Execution exec = Execution::Parallel);

/// sum over S not containing i of |S|!(n-|S|-1)!/n! * (v(S+i) - v(S)).
std::vector<Rational> subsetWeightedShapley(std::span<const Rational> worth, unsigned n,
                                            Execution exec = Execution::Parallel);

}  // namespace kernels
}  // namespace streamshare
