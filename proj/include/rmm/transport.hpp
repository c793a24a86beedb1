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

#ifndef RMM_TRANSPORT_HPP_
#define RMM_TRANSPORT_HPP_

#include <vector>

#include "rmm/instance.hpp"
#include "rmm/matrix.hpp"
#include "rmm/rational.hpp"

namespace rmm {

/// Optimal solution of the two-sided relaxation: an integral assignment
/// between two mirror copies of the population with pair value phi/2,
/// together with exact optimal dual potentials.
///
/// The duals certify optimality by themselves: v, w >= 0, v_x + w_y >=
/// phi_xy/2 everywhere, the dual objective equals the primal value, and
/// complementary slackness holds against nu.
struct BipartiteSolution {
  SquareMatrix<long long> nu;
  std::vector<Rational> duals_v;
  std::vector<Rational> duals_w;
  Rational value;
};

/// Solves the two-sided relaxation exactly. Requires an exchangeable (valid,
/// symmetric-surplus) instance. Never fails on valid input: the empty
/// assignment is always feasible, so all-negative surpluses simply yield the
/// zero solution.
BipartiteSolution solve_transportation(const Instance& inst);

/// A fractional pairing: symmetric nonnegative matrix mu with
/// 2 mu_xx + sum_{y != x} mu_xy <= n_x. Optimal ones are half-integral.
struct FractionalMatching {
  SquareMatrix<Rational> mu;
  Rational value;
};

/// Builds the half-integral optimum of the fractional pairing program by
/// symmetrizing an optimal two-sided assignment: mu_xy = (nu_xy + nu_yx)/2
/// off the diagonal and mu_xx = nu_xx/2. Its value always equals the
/// two-sided optimum.
FractionalMatching half_integral_optimum(const Instance& inst);

namespace transport_detail {

/// Lower-level entry used by the integer solver's node relaxations.
/// `pair_value` is the per-unit value of shipping on arc (x, y); arcs with a
/// non-positive value are never used. `caps`, when non-null, bounds nu per
/// arc; a negative cap means unbounded.
BipartiteSolution solve_pair_flow(const std::vector<long long>& counts,
                                  const SquareMatrix<Rational>& pair_value,
                                  const SquareMatrix<long long>* caps);

}  // namespace transport_detail

}  // namespace rmm

#endif  // RMM_TRANSPORT_HPP_
