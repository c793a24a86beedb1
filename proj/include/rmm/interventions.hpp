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

#ifndef RMM_INTERVENTIONS_HPP_
#define RMM_INTERVENTIONS_HPP_

#include <vector>

#include "rmm/instance.hpp"
#include "rmm/stability.hpp"

namespace rmm {

/// Multiplies every type's population by `factor` (same types, same surplus).
/// A factor of 2 always produces a market with a stable outcome, whatever the
/// diagonal surpluses are. Throws DomainError when factor < 1.
Instance clone(const Instance& inst, long long factor);

/// Parity-based stabilization: one individual leaves each odd-count type.
struct RemovalPlan {
  /// 1 for types that lose one individual (odd counts), 0 otherwise.
  std::vector<int> removed;
  /// The market left behind; all counts even, hence stable.
  Instance reduced;
  /// Payoff owed to the removed individual of each type (0 where none is
  /// removed): the stable payoff that type earns in the reduced market.
  std::vector<Rational> compensation;
  Rational total_cost;
  /// |X| * max(phi_max, 0); total_cost never exceeds it.
  Rational cost_bound;
};

/// Removes one individual from every odd-count type, leaving an all-even
/// market that is guaranteed stable, and prices the compensations from that
/// market's stable payoffs (zero when nobody is left).
RemovalPlan stabilize_by_removal(const Instance& inst);

/// Pairing with ordered roles: pi(x, y) counts pairs where the x-side takes
/// the first role. Unlike mu it need not be symmetric, and pi(x, y) stays 0
/// whenever the reversed order earns strictly more.
struct OrderedMatching {
  SquareMatrix<long long> pi;
  Rational value;  // sum over ordered pairs of pi_xy * phi_xy
};

struct OrderedSolveResult {
  OrderedMatching ordered;
  StabilityVerdict verdict;
};

/// Solves an ordered-roles (possibly asymmetric-surplus) market: symmetrize,
/// solve the exchangeable problem, then give each matched pair the role
/// order that attains its maximal surplus (ties go to the lower type index).
/// The verdict is the symmetrized market's verdict, which is also the
/// ordered market's.
OrderedSolveResult recover_ordered_matching(const Instance& inst);

}  // namespace rmm

#endif  // RMM_INTERVENTIONS_HPP_
