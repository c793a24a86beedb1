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

#ifndef RMM_STABILITY_HPP_
#define RMM_STABILITY_HPP_

#include <optional>
#include <vector>

#include "rmm/instance.hpp"
#include "rmm/roommate.hpp"
#include "rmm/transport.hpp"

namespace rmm {

/// A matching together with one payoff per type. Feasible when the payoffs
/// exactly exhaust the matching's surplus: sum_x n_x u_x = S(mu).
struct Outcome {
  RoommateMatching matching;
  std::vector<Rational> payoffs;
};

/// Dual certificate for the fractional pairing program: payoffs u >= 0 and an
/// antisymmetric multiplier matrix A with u_x + u_y >= phi_xy + A_xy for all
/// ordered pairs. Its objective sum_x n_x u_x equals the fractional optimum,
/// which pins the stability gap from above.
struct Certificate {
  std::vector<Rational> payoffs;
  SquareMatrix<Rational> multipliers;
  Rational objective;
};

struct StabilityVerdict {
  bool stable = false;
  Rational w_p;  // integer optimum
  Rational w_f;  // fractional (two-sided) optimum
  Rational gap;  // w_f - w_p; zero exactly when a stable outcome exists
  std::optional<Outcome> outcome;
  Certificate certificate;
};

/// Decides existence of a stable outcome by comparing the integer and
/// fractional optima exactly. Attaches a constructed stable outcome when one
/// exists and always attaches the dual certificate.
StabilityVerdict decide_stability(const Instance& inst);

/// Builds a stable outcome (optimal matching plus payoffs u_x = v_x + w_x
/// from the transportation duals) or returns nullopt when none exists.
std::optional<Outcome> construct_stable_outcome(const Instance& inst);

/// One reason an outcome fails to be stable.
struct Violation {
  enum class Kind {
    kMatchingInfeasible,   // pair counts do not conserve the population
    kBudgetImbalance,      // payoffs do not add up to the matched surplus
    kIndividualRationality,  // some u_x < 0
    kBlockingPair,           // u_x + u_y < phi_xy for some pair {x, y}
  };

  Kind kind;
  std::size_t x = 0;
  std::size_t y = 0;
  Rational deficit;
  std::string message;
};

/// Solver-free stability audit: checks the budget identity, u_x >= 0, and
/// u_x + u_y >= phi_xy over every ordered type pair (including x = y) by
/// plain arithmetic. Empty result means the outcome is stable. Throws
/// DomainError when shapes do not match the instance.
std::vector<Violation> verify_outcome(const Instance& inst, const Outcome& o);

/// Certificate from the transportation duals of the half-surplus problem:
/// u_x = v_x + w_x and A_xy = (v_y - w_y) - (v_x - w_x).
Certificate dual_certificate(const Instance& inst);

}  // namespace rmm

#endif  // RMM_STABILITY_HPP_
