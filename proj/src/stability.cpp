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

#include "rmm/stability.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "rmm/errors.hpp"

namespace rmm {
namespace {

Certificate certificate_from_duals(const Instance& inst,
                                   const BipartiteSolution& bip) {
  const std::size_t m = inst.type_count();
  Certificate cert;
  cert.payoffs.resize(m);
  cert.multipliers = SquareMatrix<Rational>(m);
  cert.objective = Rational(0);
  for (std::size_t x = 0; x < m; ++x) {
    cert.payoffs[x] = bip.duals_v[x] + bip.duals_w[x];
    cert.objective += cert.payoffs[x] * Rational(inst.counts[x]);
  }
  for (std::size_t x = 0; x < m; ++x) {
    Rational skew_x = bip.duals_v[x] - bip.duals_w[x];
    for (std::size_t y = 0; y < m; ++y) {
      Rational skew_y = bip.duals_v[y] - bip.duals_w[y];
      cert.multipliers(x, y) = skew_y - skew_x;
    }
  }
  if (cert.objective != bip.value)
    throw std::logic_error("certificate objective diverged from the optimum");
  return cert;
}

}  // namespace

StabilityVerdict decide_stability(const Instance& inst) {
  BipartiteSolution bip = solve_transportation(inst);
  SolveResult integral = solve_integer_optimum(inst);

  StabilityVerdict verdict;
  verdict.w_p = integral.value;
  verdict.w_f = bip.value;
  verdict.gap = verdict.w_f - verdict.w_p;
  verdict.stable = verdict.gap.is_zero();
  verdict.certificate = certificate_from_duals(inst, bip);
  if (verdict.stable) {
    Outcome outcome;
    outcome.matching = std::move(integral.matching);
    outcome.payoffs = verdict.certificate.payoffs;
    verdict.outcome = std::move(outcome);
  }
  return verdict;
}

std::optional<Outcome> construct_stable_outcome(const Instance& inst) {
  return decide_stability(inst).outcome;
}

std::vector<Violation> verify_outcome(const Instance& inst, const Outcome& o) {
  const std::size_t m = inst.type_count();
  if (o.matching.mu.size() != m || o.matching.singles.size() != m ||
      o.payoffs.size() != m)
    throw DomainError("outcome shape does not fit the instance");

  std::vector<Violation> violations;

  for (std::size_t x = 0; x < m; ++x) {
    long long used = o.matching.singles[x] + 2 * o.matching.mu(x, x);
    bool negative = o.matching.singles[x] < 0;
    bool symmetric = true;
    for (std::size_t y = 0; y < m; ++y) {
      if (y != x) used += o.matching.mu(x, y);
      negative = negative || o.matching.mu(x, y) < 0;
      symmetric = symmetric && o.matching.mu(x, y) == o.matching.mu(y, x);
    }
    if (negative || !symmetric || used != inst.counts[x]) {
      Violation v;
      v.kind = Violation::Kind::kMatchingInfeasible;
      v.x = x;
      v.y = x;
      v.deficit = Rational(used - inst.counts[x]);
      v.message = "type '" + inst.type_labels[x] +
                  "' pair counts do not form a feasible matching";
      violations.push_back(std::move(v));
    }
  }

  // Budget identity: payoffs must exactly exhaust the matched surplus.
  Rational total_surplus(0);
  for (std::size_t x = 0; x < m; ++x) {
    total_surplus += Rational(o.matching.mu(x, x)) * inst.surplus(x, x);
    for (std::size_t y = x + 1; y < m; ++y)
      total_surplus += Rational(o.matching.mu(x, y)) * inst.surplus(x, y);
  }
  Rational paid(0);
  for (std::size_t x = 0; x < m; ++x)
    paid += o.payoffs[x] * Rational(inst.counts[x]);
  if (paid != total_surplus) {
    Violation v;
    v.kind = Violation::Kind::kBudgetImbalance;
    v.deficit = paid - total_surplus;
    v.message = "payoffs sum to " + paid.to_string() +
                " but the matching creates " + total_surplus.to_string();
    violations.push_back(std::move(v));
  }

  for (std::size_t x = 0; x < m; ++x) {
    if (o.payoffs[x].is_negative()) {
      Violation v;
      v.kind = Violation::Kind::kIndividualRationality;
      v.x = x;
      v.y = x;
      v.deficit = -o.payoffs[x];
      v.message = "type '" + inst.type_labels[x] + "' would rather be single (u = " +
                  o.payoffs[x].to_string() + " < 0)";
      violations.push_back(std::move(v));
    }
  }

  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x; y < m; ++y) {
      // Both role orders share the payoff sum, so one check against the
      // larger surplus covers the two ordered constraints.
      Rational joint = Rational::max(inst.surplus(x, y), inst.surplus(y, x));
      Rational sum = o.payoffs[x] + o.payoffs[y];
      if (sum < joint) {
        Violation v;
        v.kind = Violation::Kind::kBlockingPair;
        v.x = x;
        v.y = y;
        v.deficit = joint - sum;
        v.message = "pair {" + inst.type_labels[x] + ", " +
                    inst.type_labels[y] + "} blocks: " + sum.to_string() +
                    " < " + joint.to_string();
        violations.push_back(std::move(v));
      }
    }
  }

  return violations;
}

Certificate dual_certificate(const Instance& inst) {
  return certificate_from_duals(inst, solve_transportation(inst));
}

}  // namespace rmm
