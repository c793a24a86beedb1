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

#include "rmm/transport.hpp"

#include <doctest.h>

#include "rmm/errors.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace rmm;

namespace {

SquareMatrix<Rational> half_surplus(const Instance& inst) {
  const std::size_t m = inst.type_count();
  SquareMatrix<Rational> half(m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      half(x, y) = inst.surplus(x, y) / Rational(2);
  return half;
}

// Feasibility + complementary slackness audit against the instance, stated
// directly from the solution fields.
void check_solution_invariants(const Instance& inst,
                               const BipartiteSolution& sol) {
  const std::size_t m = inst.type_count();
  Rational dual_objective(0);
  Rational primal_value(0);
  for (std::size_t x = 0; x < m; ++x) {
    CHECK(!sol.duals_v[x].is_negative());
    CHECK(!sol.duals_w[x].is_negative());
    dual_objective += (sol.duals_v[x] + sol.duals_w[x]) *
                      Rational(inst.counts[x]);
    long long row = 0, col = 0;
    for (std::size_t y = 0; y < m; ++y) {
      CHECK(sol.nu(x, y) >= 0);
      row += sol.nu(x, y);
      col += sol.nu(y, x);
      primal_value +=
          Rational(sol.nu(x, y)) * inst.surplus(x, y) / Rational(2);
    }
    CHECK(row <= inst.counts[x]);
    CHECK(col <= inst.counts[x]);
    if (row < inst.counts[x]) CHECK(sol.duals_v[x].is_zero());
    if (col < inst.counts[x]) CHECK(sol.duals_w[x].is_zero());
  }
  CHECK(primal_value == sol.value);
  CHECK(dual_objective == sol.value);  // strong duality, exactly
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      Rational covered = sol.duals_v[x] + sol.duals_w[y];
      Rational needed = inst.surplus(x, y) / Rational(2);
      CHECK(covered >= needed);
      if (sol.nu(x, y) > 0) CHECK(covered == needed);
    }
  }
}

}  // namespace

TEST_CASE("triangle market: relaxed value is 19/2 on the cycle") {
  Instance inst = testing::triangle_market();

  // Freeze the expected value from the enumeration oracle first.
  Rational oracle =
      testing::bipartite_enumeration_optimum(inst.counts, half_surplus(inst));
  CHECK(oracle == Rational(19, 2));

  BipartiteSolution sol = solve_transportation(inst);
  CHECK(sol.value == Rational(19, 2));
  check_solution_invariants(inst, sol);

  // An optimal assignment ships one unit around a 3-cycle; whichever
  // orientation the solver picks, every unit must be placed and no diagonal
  // used (diagonal surplus is 0 here).
  long long total = 0;
  for (std::size_t x = 0; x < 3; ++x) {
    CHECK(sol.nu(x, x) == 0);
    for (std::size_t y = 0; y < 3; ++y) total += sol.nu(x, y);
  }
  CHECK(total == 3);
}

TEST_CASE("single type with two individuals") {
  Instance inst = testing::make_instance({2}, {{4}});
  BipartiteSolution sol = solve_transportation(inst);
  CHECK(sol.value == Rational(4));
  CHECK(sol.nu(0, 0) == 2);
  check_solution_invariants(inst, sol);
  // Any feasible optimal duals are acceptable; feasibility forces
  // v + w = phi/2 = 2 here.
  CHECK(sol.duals_v[0] + sol.duals_w[0] == Rational(2));
}

TEST_CASE("all-negative surplus leaves everyone unmatched") {
  Instance inst =
      testing::make_instance({2, 3}, {{-1, -2}, {-2, -5}});
  BipartiteSolution sol = solve_transportation(inst);
  CHECK(sol.value == Rational(0));
  for (std::size_t x = 0; x < 2; ++x) {
    CHECK(sol.duals_v[x].is_zero());
    CHECK(sol.duals_w[x].is_zero());
    for (std::size_t y = 0; y < 2; ++y) CHECK(sol.nu(x, y) == 0);
  }
  check_solution_invariants(inst, sol);
}

TEST_CASE("nonexchangeable input is refused") {
  Instance inst = testing::make_instance({1, 1}, {{0, 7}, {3, 0}});
  CHECK_THROWS_AS((void)solve_transportation(inst), DomainError);
}

TEST_CASE("half-integral optimum of the triangle market") {
  Instance inst = testing::triangle_market();
  FractionalMatching frac = half_integral_optimum(inst);
  CHECK(frac.value == Rational(19, 2));
  const Rational half(1, 2);
  CHECK(frac.mu(0, 1) == half);
  CHECK(frac.mu(0, 2) == half);
  CHECK(frac.mu(1, 2) == half);
  CHECK(frac.mu(0, 0) == Rational(0));
  CHECK(frac.mu(1, 1) == Rational(0));
  CHECK(frac.mu(2, 2) == Rational(0));
}

TEST_CASE("doubled triangle market has the integral optimum") {
  Instance inst = testing::doubled_triangle_market();
  FractionalMatching frac = half_integral_optimum(inst);
  CHECK(frac.value == Rational(19));
  CHECK(frac.mu(0, 1) == Rational(1));
  CHECK(frac.mu(0, 2) == Rational(1));
  CHECK(frac.mu(1, 2) == Rational(1));
}

TEST_CASE("single type, three individuals: fractional self-matching") {
  Instance inst = testing::make_instance({3}, {{4}});
  // The half-grid oracle pins the expected value: mu_11 <= 3/2, so 6.
  CHECK(testing::fractional_halfgrid_optimum(inst) == Rational(6));
  FractionalMatching frac = half_integral_optimum(inst);
  CHECK(frac.value == Rational(6));
  CHECK(frac.mu(0, 0) == Rational(3, 2));
}

TEST_CASE("random symmetric markets match the enumeration oracle") {
  testing::Rng rng(20260101);
  for (int trial = 0; trial < 150; ++trial) {
    Instance inst = testing::random_symmetric_instance(rng, 3, 3, -5, 10);
    BipartiteSolution sol = solve_transportation(inst);
    Rational oracle = testing::bipartite_enumeration_optimum(
        inst.counts, half_surplus(inst));
    CHECK(sol.value == oracle);
    check_solution_invariants(inst, sol);
  }
  // Same comparison at the full corpus shape: up to 5 types, counts up to 4.
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = testing::random_symmetric_instance(rng, 5, 4, -5, 10);
    CHECK(solve_transportation(inst).value ==
          testing::bipartite_enumeration_optimum(inst.counts,
                                                 half_surplus(inst)));
  }
}

TEST_CASE("random larger markets keep exact optimality invariants") {
  testing::Rng rng(20260202);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = testing::random_symmetric_instance(rng, 5, 4, -5, 10);
    BipartiteSolution sol = solve_transportation(inst);
    check_solution_invariants(inst, sol);

    FractionalMatching frac = half_integral_optimum(inst);
    CHECK(frac.value == sol.value);
    for (std::size_t x = 0; x < inst.type_count(); ++x)
      for (std::size_t y = 0; y < inst.type_count(); ++y) {
        // Half-integrality: denominators are 1 or 2.
        CHECK((frac.mu(x, y).den() == 1 || frac.mu(x, y).den() == 2));
        CHECK(!frac.mu(x, y).is_negative());
      }
  }
}

TEST_CASE("fractional optimum agrees with the half-grid search on tiny markets") {
  testing::Rng rng(20260303);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = testing::random_symmetric_instance(rng, 3, 2, -4, 6);
    FractionalMatching frac = half_integral_optimum(inst);
    CHECK(frac.value == testing::fractional_halfgrid_optimum(inst));
  }
}

TEST_CASE("fractional value scales linearly under cloning counts") {
  testing::Rng rng(20260404);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = testing::random_symmetric_instance(rng, 4, 3, -5, 10);
    Instance tripled = inst;
    for (auto& c : tripled.counts) c *= 3;
    CHECK(solve_transportation(tripled).value ==
          Rational(3) * solve_transportation(inst).value);
  }
}
