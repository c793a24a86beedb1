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

#include "rmm/interventions.hpp"

#include <stdexcept>
#include <utility>

#include "rmm/errors.hpp"
#include "rmm/roommate.hpp"

namespace rmm {

Instance clone(const Instance& inst, long long factor) {
  if (factor < 1)
    throw DomainError("clone factor must be a positive integer");
  Instance cloned = inst;
  for (long long& count : cloned.counts) {
    long long scaled;
    if (__builtin_mul_overflow(count, factor, &scaled))
      throw DomainError("cloned population does not fit a 64-bit count");
    count = scaled;
  }
  return cloned;
}

RemovalPlan stabilize_by_removal(const Instance& inst) {
  if (!validate(inst).ok())
    throw DomainError("stabilize_by_removal requires a valid instance");
  if (!inst.exchangeable)
    throw DomainError(
        "stabilize_by_removal requires an exchangeable instance");

  const std::size_t m = inst.type_count();
  RemovalPlan plan;
  plan.removed.resize(m, 0);
  plan.reduced = inst;
  for (std::size_t x = 0; x < m; ++x) {
    if (inst.counts[x] % 2 != 0) {
      plan.removed[x] = 1;
      plan.reduced.counts[x] -= 1;
    }
  }

  plan.compensation.assign(m, Rational(0));
  plan.total_cost = Rational(0);
  if (plan.reduced.population() > 0) {
    auto outcome = construct_stable_outcome(plan.reduced);
    if (!outcome)
      throw std::logic_error("all-even reduced market has no stable outcome");
    for (std::size_t x = 0; x < m; ++x) {
      if (plan.removed[x] == 1) {
        plan.compensation[x] = outcome->payoffs[x];
        plan.total_cost += plan.compensation[x];
      }
    }
  }

  plan.cost_bound = Rational::max(inst.max_surplus(), Rational(0)) *
                    Rational(static_cast<long long>(m));
  return plan;
}

OrderedSolveResult recover_ordered_matching(const Instance& inst) {
  if (!validate(inst).ok())
    throw DomainError("recover_ordered_matching requires a valid instance");

  SymmetrizeResult sym = symmetrize(inst);
  SolveResult solved = solve_integer_optimum(sym.instance);

  const std::size_t m = inst.type_count();
  OrderedSolveResult result;
  result.ordered.pi = SquareMatrix<long long>(m, 0);
  for (std::size_t x = 0; x < m; ++x) {
    result.ordered.pi(x, x) = solved.matching.mu(x, x);
    for (std::size_t y = x + 1; y < m; ++y) {
      long long pairs = solved.matching.mu(x, y);
      if (pairs == 0) continue;
      // Orient every pair toward the order that attains the maximum; on a
      // tie the lower type index takes the first role.
      if (inst.surplus(x, y) >= inst.surplus(y, x)) {
        result.ordered.pi(x, y) = pairs;
      } else {
        result.ordered.pi(y, x) = pairs;
      }
    }
  }

  result.ordered.value = Rational(0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (result.ordered.pi(x, y) != 0)
        result.ordered.value +=
            Rational(result.ordered.pi(x, y)) * inst.surplus(x, y);
  if (result.ordered.value != solved.value)
    throw std::logic_error("oriented value diverged from the symmetric optimum");

  result.verdict = decide_stability(sym.instance);
  return result;
}

}  // namespace rmm
