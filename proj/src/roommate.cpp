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

#include "rmm/roommate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmm/errors.hpp"
#include "rmm/transport.hpp"

namespace rmm {
namespace {

void require_exchangeable(const Instance& inst, const char* op) {
  if (!validate(inst).ok())
    throw DomainError(std::string(op) + " requires a valid instance");
  if (!inst.exchangeable)
    throw DomainError(std::string(op) +
                      " requires an exchangeable (symmetric-surplus) instance");
}

Rational matching_value(const SquareMatrix<long long>& mu,
                        const Instance& inst) {
  const std::size_t m = inst.type_count();
  Rational total(0);
  for (std::size_t x = 0; x < m; ++x) {
    if (mu(x, x) != 0) total += Rational(mu(x, x)) * inst.surplus(x, x);
    for (std::size_t y = x + 1; y < m; ++y)
      if (mu(x, y) != 0) total += Rational(mu(x, y)) * inst.surplus(x, y);
  }
  return total;
}

}  // namespace

RoommateMatching all_singles_matching(const Instance& inst) {
  RoommateMatching matching;
  matching.mu = SquareMatrix<long long>(inst.type_count(), 0);
  matching.singles = inst.counts;
  return matching;
}

Rational surplus_of(const RoommateMatching& matching, const Instance& inst) {
  const std::size_t m = inst.type_count();
  if (matching.mu.size() != m || matching.singles.size() != m)
    throw DomainError("matching shape does not fit the instance");
  for (std::size_t x = 0; x < m; ++x) {
    if (matching.singles[x] < 0)
      throw DomainError("matching has a negative singles count");
    long long used = matching.singles[x] + 2 * matching.mu(x, x);
    for (std::size_t y = 0; y < m; ++y) {
      if (matching.mu(x, y) < 0)
        throw DomainError("matching has a negative pair count");
      if (matching.mu(x, y) != matching.mu(y, x))
        throw DomainError("matching matrix is not symmetric");
      if (y != x) used += matching.mu(x, y);
    }
    if (used != inst.counts[x])
      throw DomainError("matching does not conserve the population of type '" +
                        inst.type_labels[x] + "'");
  }
  return matching_value(matching.mu, inst);
}

namespace {

// One branch-and-bound node: box constraints on the pair counts. upper < 0
// means unbounded above. Both matrices stay symmetric.
struct Node {
  SquareMatrix<long long> lower;
  SquareMatrix<long long> upper;
};

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, long long node_limit)
      : inst_(inst), m_(inst.type_count()), node_limit_(node_limit) {
    half_surplus_ = SquareMatrix<Rational>(m_);
    const Rational two(2);
    for (std::size_t x = 0; x < m_; ++x)
      for (std::size_t y = 0; y < m_; ++y)
        half_surplus_(x, y) = inst.surplus(x, y) / two;
  }

  SolveResult run() {
    SolveResult incumbent;
    incumbent.matching = all_singles_matching(inst_);
    incumbent.value = Rational(0);

    std::vector<Node> stack;
    stack.push_back(Node{SquareMatrix<long long>(m_, 0),
                         SquareMatrix<long long>(m_, -1)});
    long long nodes = 0;

    while (!stack.empty()) {
      if (++nodes > node_limit_)
        throw ResourceLimitError("integer solver exceeded its node limit (" +
                                 std::to_string(node_limit_) + " nodes)");
      Node node = std::move(stack.back());
      stack.pop_back();

      // Committed pairs move out of the population and into the objective.
      std::vector<long long> remaining = inst_.counts;
      Rational committed(0);
      bool infeasible = false;
      for (std::size_t x = 0; x < m_ && !infeasible; ++x) {
        remaining[x] -= 2 * node.lower(x, x);
        for (std::size_t y = 0; y < m_; ++y)
          if (y != x) remaining[x] -= node.lower(x, y);
        if (remaining[x] < 0) infeasible = true;
      }
      if (infeasible) continue;
      committed = matching_value(node.lower, inst_);

      SquareMatrix<long long> caps(m_, 0);
      for (std::size_t x = 0; x < m_; ++x) {
        for (std::size_t y = 0; y < m_; ++y) {
          if (node.upper(x, y) < 0) {
            caps(x, y) = -1;
          } else {
            long long room = node.upper(x, y) - node.lower(x, y);
            caps(x, y) = (x == y) ? 2 * room : room;
          }
        }
      }

      BipartiteSolution relaxed =
          transport_detail::solve_pair_flow(remaining, half_surplus_, &caps);
      Rational bound = committed + relaxed.value;
      if (bound <= incumbent.value) continue;

      // Residual fractional pairing on top of the committed pairs; entries
      // are halves of integers.
      SquareMatrix<long long> twice_mu(m_, 0);
      for (std::size_t x = 0; x < m_; ++x) {
        twice_mu(x, x) = 2 * node.lower(x, x) + relaxed.nu(x, x);
        for (std::size_t y = x + 1; y < m_; ++y) {
          long long doubled =
              2 * node.lower(x, y) + relaxed.nu(x, y) + relaxed.nu(y, x);
          twice_mu(x, y) = doubled;
          twice_mu(y, x) = doubled;
        }
      }

      bool found_fractional = false;
      std::size_t bx = 0, by = 0;
      for (std::size_t x = 0; x < m_; ++x) {
        for (std::size_t y = x; y < m_; ++y) {
          if (twice_mu(x, y) % 2 == 0) continue;
          if (!found_fractional ||
              inst_.surplus(x, y) > inst_.surplus(bx, by)) {
            bx = x;
            by = y;
            found_fractional = true;
          }
        }
      }

      if (!found_fractional) {
        SolveResult candidate;
        candidate.matching.mu = SquareMatrix<long long>(m_, 0);
        candidate.matching.singles.assign(m_, 0);
        for (std::size_t x = 0; x < m_; ++x)
          for (std::size_t y = 0; y < m_; ++y)
            candidate.matching.mu(x, y) = twice_mu(x, y) / 2;
        for (std::size_t x = 0; x < m_; ++x) {
          long long used = 2 * candidate.matching.mu(x, x);
          for (std::size_t y = 0; y < m_; ++y)
            if (y != x) used += candidate.matching.mu(x, y);
          candidate.matching.singles[x] = inst_.counts[x] - used;
        }
        candidate.value = bound;
        if (candidate.value > incumbent.value) incumbent = std::move(candidate);
        continue;
      }

      long long down = twice_mu(bx, by) / 2;  // floor of the half value
      Node below = node;
      below.upper(bx, by) = down;
      below.upper(by, bx) = down;
      Node above = node;
      above.lower(bx, by) = down + 1;
      above.lower(by, bx) = down + 1;
      stack.push_back(std::move(below));
      stack.push_back(std::move(above));  // popped first: try the larger side
    }
    return incumbent;
  }

 private:
  const Instance& inst_;
  std::size_t m_;
  long long node_limit_;
  SquareMatrix<Rational> half_surplus_;
};

}  // namespace

SolveResult solve_integer_optimum(const Instance& inst, long long node_limit) {
  require_exchangeable(inst, "solve_integer_optimum");
  if (node_limit < 1) throw DomainError("node limit must be positive");
  BranchAndBound solver(inst, node_limit);
  return solver.run();
}

namespace {

class ExhaustiveSearch {
 public:
  explicit ExhaustiveSearch(const Instance& inst) : inst_(inst) {
    for (std::size_t x = 0; x < inst.type_count(); ++x)
      for (long long i = 0; i < inst.counts[x]; ++i)
        type_of_.push_back(x);
    used_.assign(type_of_.size(), false);
  }

  SolveResult run() {
    best_.matching = all_singles_matching(inst_);
    best_.value = Rational(0);
    explore(Rational(0));
    return best_;
  }

 private:
  void explore(const Rational& accumulated) {
    std::size_t i = 0;
    while (i < used_.size() && used_[i]) ++i;
    if (i == used_.size()) {
      if (accumulated > best_.value) {
        best_.value = accumulated;
        best_.matching = aggregate();
      }
      return;
    }
    used_[i] = true;
    explore(accumulated);  // i stays single
    for (std::size_t j = i + 1; j < used_.size(); ++j) {
      if (used_[j]) continue;
      used_[j] = true;
      pairs_.emplace_back(i, j);
      explore(accumulated + inst_.surplus(type_of_[i], type_of_[j]));
      pairs_.pop_back();
      used_[j] = false;
    }
    used_[i] = false;
  }

  RoommateMatching aggregate() const {
    RoommateMatching matching = all_singles_matching(inst_);
    for (auto [i, j] : pairs_) {
      std::size_t x = type_of_[i];
      std::size_t y = type_of_[j];
      matching.mu(x, y) += 1;
      if (x != y) matching.mu(y, x) += 1;
      matching.singles[x] -= 1;
      matching.singles[y] -= 1;
    }
    return matching;
  }

  const Instance& inst_;
  std::vector<std::size_t> type_of_;
  std::vector<bool> used_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  SolveResult best_;
};

}  // namespace

SolveResult brute_force_optimum(const Instance& inst) {
  require_exchangeable(inst, "brute_force_optimum");
  if (inst.population() > kBruteForceMaxPopulation)
    throw DomainError("population " + std::to_string(inst.population()) +
                      " exceeds the exhaustive-search limit of " +
                      std::to_string(kBruteForceMaxPopulation));
  ExhaustiveSearch search(inst);
  return search.run();
}

}  // namespace rmm
