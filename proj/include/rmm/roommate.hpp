// Copyright 2026 The rmmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RMM_ROOMMATE_HPP_
#define RMM_ROOMMATE_HPP_

#include <vector>

#include "rmm/instance.hpp"
#include "rmm/matrix.hpp"
#include "rmm/rational.hpp"

namespace rmm {

/// An integral pairing of the population, counted at type level.
/// mu(x, y) = mu(y, x) is the number of {x, y} pairs (same cell value on both
/// sides of the diagonal), mu(x, x) the number of same-type pairs, and
/// singles[x] the number of unmatched individuals, so that
/// 2 mu_xx + sum_{y != x} mu_xy + singles_x = n_x for every type.
struct RoommateMatching {
  SquareMatrix<long long> mu;
  std::vector<long long> singles;
};

/// The everyone-single matching for an instance.
RoommateMatching all_singles_matching(const Instance& inst);

/// Total surplus of a matching: sum_x mu_xx phi_xx + sum_{x<y} mu_xy phi_xy
/// (each unordered pair counted once). Throws DomainError when the matching
/// is not feasible for the instance.
Rational surplus_of(const RoommateMatching& matching, const Instance& inst);

struct SolveResult {
  RoommateMatching matching;
  Rational value;
};

/// Default node budget for the integer solver; exceeding it raises
/// ResourceLimitError rather than grinding on unboundedly.
inline constexpr long long kBranchAndBoundNodeLimit = 1'000'000;

/// Exact integer optimum of the pairing program, by branch and bound on the
/// half-integral relaxation: the relaxation bounds each node and any
/// half-valued coordinate is split floor/ceil (the ceil side explored
/// first). Requires an exchangeable instance.
SolveResult solve_integer_optimum(
    const Instance& inst, long long node_limit = kBranchAndBoundNodeLimit);

/// Population cap for the exhaustive individual-level search.
inline constexpr long long kBruteForceMaxPopulation = 12;

/// Independent oracle: enumerates every partition of the individuals into
/// pairs and singles, then aggregates the best one to type level. Values are
/// exactly comparable with solve_integer_optimum. Requires population <= 12.
SolveResult brute_force_optimum(const Instance& inst);

}  // namespace rmm

#endif  // RMM_ROOMMATE_HPP_
