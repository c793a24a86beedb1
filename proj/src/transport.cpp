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

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "rmm/errors.hpp"

namespace rmm {
namespace transport_detail {
namespace {

// Primal-dual state for one solve. The algorithm keeps duals (v, w) feasible
// at all times and flow only on arcs that respect complementary slackness:
//   - nu_xy > 0 implies v_x + w_y <= c_xy,
//   - v_x + w_y < c_xy implies nu_xy sits at its cap.
// It ends once every row with remaining supply has v_x = 0, at which point
// (nu, v, w) is an optimal primal-dual pair.
class PairFlowSolver {
 public:
  PairFlowSolver(const std::vector<long long>& counts,
                 const SquareMatrix<Rational>& pair_value,
                 const SquareMatrix<long long>* caps)
      : m_(counts.size()),
        counts_(counts),
        value_(pair_value),
        caps_(caps),
        nu_(counts.size(), 0),
        row_used_(counts.size(), 0),
        col_used_(counts.size(), 0),
        candidate_(counts.size(), 0),
        v_(counts.size()),
        w_(counts.size()) {
    for (std::size_t x = 0; x < m_; ++x) {
      Rational best(0);
      for (std::size_t y = 0; y < m_; ++y) {
        if (cap_of(x, y) == 0) continue;
        if (value_(x, y) > Rational(0)) {
          candidate_(x, y) = 1;
          best = Rational::max(best, value_(x, y));
        }
      }
      v_[x] = best;
      w_[x] = Rational(0);
    }
  }

  BipartiteSolution run() {
    long long safety = 0;
    while (true) {
      if (++safety > kStepLimit)
        throw std::logic_error("pair-flow solver failed to terminate");
      if (!grow_and_advance()) break;
    }
    BipartiteSolution sol;
    sol.nu = nu_;
    sol.duals_v = v_;
    sol.duals_w = w_;
    sol.value = Rational(0);
    for (std::size_t x = 0; x < m_; ++x)
      for (std::size_t y = 0; y < m_; ++y)
        if (nu_(x, y) > 0)
          sol.value += value_(x, y) * Rational(nu_(x, y));
    check_optimality(sol);
    return sol;
  }

 private:
  static constexpr long long kStepLimit = 2'000'000;

  long long cap_of(std::size_t x, std::size_t y) const {
    return caps_ ? (*caps_)(x, y) : -1;
  }

  bool arc_open(std::size_t x, std::size_t y) const {
    long long cap = cap_of(x, y);
    return cap < 0 || nu_(x, y) < cap;
  }

  bool tight(std::size_t x, std::size_t y) const {
    return v_[x] + w_[y] == value_(x, y);
  }

  // One labeling phase: augments along an alternating path when possible,
  // otherwise shifts the duals. Returns false when no unsettled row remains.
  bool grow_and_advance() {
    row_labeled_.assign(m_, false);
    col_labeled_.assign(m_, false);
    row_parent_.assign(m_, kNone);
    col_parent_.assign(m_, kNone);

    std::deque<std::pair<bool, std::size_t>> queue;  // (is_row, index)
    bool any_root = false;
    for (std::size_t x = 0; x < m_; ++x) {
      if (row_used_[x] < counts_[x] && v_[x] > Rational(0)) {
        row_labeled_[x] = true;
        queue.emplace_back(true, x);
        any_root = true;
      }
    }
    if (!any_root) return false;

    while (!queue.empty()) {
      auto [is_row, idx] = queue.front();
      queue.pop_front();
      if (is_row) {
        for (std::size_t y = 0; y < m_; ++y) {
          if (col_labeled_[y] || !candidate_(idx, y)) continue;
          if (!arc_open(idx, y) || !tight(idx, y)) continue;
          col_labeled_[y] = true;
          col_parent_[y] = static_cast<long long>(idx);
          if (col_used_[y] < counts_[y]) {
            augment_to_column(y);
            return true;
          }
          queue.emplace_back(false, y);
        }
      } else {
        for (std::size_t x = 0; x < m_; ++x) {
          if (row_labeled_[x] || nu_(x, idx) == 0 || !tight(x, idx)) continue;
          row_labeled_[x] = true;
          row_parent_[x] = static_cast<long long>(idx);
          if (v_[x].is_zero()) {
            augment_to_row(x);
            return true;
          }
          queue.emplace_back(true, x);
        }
      }
    }
    shift_duals();
    return true;
  }

  // Walks parent pointers from a column with free capacity back to a root
  // row, pushing the path bottleneck along the way.
  void augment_to_column(std::size_t sink) {
    long long delta = counts_[sink] - col_used_[sink];
    std::size_t y = sink;
    while (true) {
      std::size_t x = static_cast<std::size_t>(col_parent_[y]);
      if (long long cap = cap_of(x, y); cap >= 0)
        delta = std::min(delta, cap - nu_(x, y));
      if (row_parent_[x] == kNone) {
        delta = std::min(delta, counts_[x] - row_used_[x]);
        break;
      }
      y = static_cast<std::size_t>(row_parent_[x]);
      delta = std::min(delta, nu_(x, y));
    }

    y = sink;
    while (true) {
      std::size_t x = static_cast<std::size_t>(col_parent_[y]);
      nu_(x, y) += delta;
      if (row_parent_[x] == kNone) {
        row_used_[x] += delta;
        break;
      }
      y = static_cast<std::size_t>(row_parent_[x]);
      nu_(x, y) -= delta;
    }
    col_used_[sink] += delta;
  }

  // Same walk, but the path ends on a row whose dual is already zero; that
  // row just gives up some of its matched mass, which costs nothing.
  void augment_to_row(std::size_t sink) {
    std::size_t first_col = static_cast<std::size_t>(row_parent_[sink]);
    long long delta = nu_(sink, first_col);
    std::size_t y = first_col;
    while (true) {
      std::size_t x = static_cast<std::size_t>(col_parent_[y]);
      if (long long cap = cap_of(x, y); cap >= 0)
        delta = std::min(delta, cap - nu_(x, y));
      if (row_parent_[x] == kNone) {
        delta = std::min(delta, counts_[x] - row_used_[x]);
        break;
      }
      y = static_cast<std::size_t>(row_parent_[x]);
      delta = std::min(delta, nu_(x, y));
    }

    nu_(sink, first_col) -= delta;
    row_used_[sink] -= delta;
    y = first_col;
    while (true) {
      std::size_t x = static_cast<std::size_t>(col_parent_[y]);
      nu_(x, y) += delta;
      if (row_parent_[x] == kNone) {
        row_used_[x] += delta;
        break;
      }
      y = static_cast<std::size_t>(row_parent_[x]);
      nu_(x, y) -= delta;
    }
  }

  // Lowers v on labeled rows and raises w on labeled columns by the largest
  // step that keeps the duals feasible and flow-carrying arcs consistent.
  void shift_duals() {
    bool have = false;
    Rational delta;
    auto consider = [&have, &delta](const Rational& candidate) {
      if (!have || candidate < delta) {
        delta = candidate;
        have = true;
      }
    };

    for (std::size_t x = 0; x < m_; ++x)
      if (row_labeled_[x]) consider(v_[x]);

    for (std::size_t x = 0; x < m_; ++x) {
      if (!row_labeled_[x]) continue;
      for (std::size_t y = 0; y < m_; ++y) {
        if (col_labeled_[y] || !candidate_(x, y) || !arc_open(x, y)) continue;
        Rational slack = v_[x] + w_[y] - value_(x, y);
        if (slack > Rational(0)) consider(slack);
      }
    }

    // Arcs pinned at their cap from an unlabeled row into a labeled column:
    // raising w must not push them past tightness while they carry flow.
    for (std::size_t y = 0; y < m_; ++y) {
      if (!col_labeled_[y]) continue;
      for (std::size_t x = 0; x < m_; ++x) {
        if (row_labeled_[x] || nu_(x, y) == 0) continue;
        Rational below = value_(x, y) - v_[x] - w_[y];
        if (below > Rational(0)) consider(below);
      }
    }

    if (!have || !(delta > Rational(0)))
      throw std::logic_error("pair-flow dual shift stalled");
    for (std::size_t x = 0; x < m_; ++x)
      if (row_labeled_[x]) v_[x] -= delta;
    for (std::size_t y = 0; y < m_; ++y)
      if (col_labeled_[y]) w_[y] += delta;
  }

  // Full optimality audit: feasibility, dual feasibility, complementary
  // slackness and strong duality, all in exact arithmetic. A failure here is
  // a solver defect, not bad input.
  void check_optimality(const BipartiteSolution& sol) const {
    Rational dual_objective(0);
    for (std::size_t x = 0; x < m_; ++x) {
      long long shipped = 0;
      for (std::size_t y = 0; y < m_; ++y) shipped += sol.nu(x, y);
      if (shipped > counts_[x])
        throw std::logic_error("pair-flow row capacity violated");
      if (shipped < counts_[x] && !sol.duals_v[x].is_zero())
        throw std::logic_error("pair-flow row slackness violated");
      dual_objective += sol.duals_v[x] * Rational(counts_[x]);
    }
    for (std::size_t y = 0; y < m_; ++y) {
      long long shipped = 0;
      for (std::size_t x = 0; x < m_; ++x) shipped += sol.nu(x, y);
      if (shipped > counts_[y])
        throw std::logic_error("pair-flow column capacity violated");
      if (shipped < counts_[y] && !sol.duals_w[y].is_zero())
        throw std::logic_error("pair-flow column slackness violated");
      dual_objective += sol.duals_w[y] * Rational(counts_[y]);
    }
    for (std::size_t x = 0; x < m_; ++x) {
      if (sol.duals_v[x].is_negative() || sol.duals_w[x].is_negative())
        throw std::logic_error("pair-flow negative dual");
      for (std::size_t y = 0; y < m_; ++y) {
        Rational covered = sol.duals_v[x] + sol.duals_w[y];
        long long cap = cap_of(x, y);
        if (covered < value_(x, y)) {
          // Only a capped, saturated arc may stay under-covered; its cap
          // multiplier absorbs the rest of the dual objective.
          if (cap < 0 || sol.nu(x, y) != cap)
            throw std::logic_error("pair-flow dual infeasible");
          dual_objective += (value_(x, y) - covered) * Rational(cap);
        } else if (sol.nu(x, y) > 0 && covered != value_(x, y)) {
          throw std::logic_error("pair-flow slackness violated on an arc");
        }
        if (cap >= 0 && sol.nu(x, y) > cap)
          throw std::logic_error("pair-flow cap violated");
      }
    }
    if (dual_objective != sol.value)
      throw std::logic_error("pair-flow strong duality violated");
  }

  static constexpr long long kNone = -1;

  std::size_t m_;
  std::vector<long long> counts_;
  SquareMatrix<Rational> value_;
  const SquareMatrix<long long>* caps_;

  SquareMatrix<long long> nu_;
  std::vector<long long> row_used_;
  std::vector<long long> col_used_;
  SquareMatrix<unsigned char> candidate_;
  std::vector<Rational> v_;
  std::vector<Rational> w_;

  std::vector<bool> row_labeled_;
  std::vector<bool> col_labeled_;
  std::vector<long long> row_parent_;
  std::vector<long long> col_parent_;
};

}  // namespace

BipartiteSolution solve_pair_flow(const std::vector<long long>& counts,
                                  const SquareMatrix<Rational>& pair_value,
                                  const SquareMatrix<long long>* caps) {
  PairFlowSolver solver(counts, pair_value, caps);
  return solver.run();
}

}  // namespace transport_detail

namespace {

void require_exchangeable(const Instance& inst, const char* op) {
  ValidationReport report = validate(inst);
  if (!report.ok())
    throw DomainError(std::string(op) + " requires a valid instance");
  if (!inst.exchangeable)
    throw DomainError(std::string(op) +
                      " requires an exchangeable (symmetric-surplus) instance");
}

}  // namespace

BipartiteSolution solve_transportation(const Instance& inst) {
  require_exchangeable(inst, "solve_transportation");
  const std::size_t m = inst.type_count();
  SquareMatrix<Rational> half(m);
  const Rational two(2);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      half(x, y) = inst.surplus(x, y) / two;
  return transport_detail::solve_pair_flow(inst.counts, half, nullptr);
}

FractionalMatching half_integral_optimum(const Instance& inst) {
  BipartiteSolution bip = solve_transportation(inst);
  const std::size_t m = inst.type_count();
  FractionalMatching frac;
  frac.mu = SquareMatrix<Rational>(m);
  const Rational two(2);
  for (std::size_t x = 0; x < m; ++x) {
    frac.mu(x, x) = Rational(bip.nu(x, x)) / two;
    for (std::size_t y = x + 1; y < m; ++y) {
      Rational shared = Rational(bip.nu(x, y) + bip.nu(y, x)) / two;
      frac.mu(x, y) = shared;
      frac.mu(y, x) = shared;
    }
  }
  frac.value = Rational(0);
  for (std::size_t x = 0; x < m; ++x) {
    frac.value += frac.mu(x, x) * inst.surplus(x, x);
    for (std::size_t y = x + 1; y < m; ++y)
      frac.value += frac.mu(x, y) * inst.surplus(x, y);
  }
  if (frac.value != bip.value)
    throw std::logic_error("half-integral value diverged from the relaxation");
  return frac;
}

}  // namespace rmm
