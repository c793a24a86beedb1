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
//
// End-to-end acceptance suite. Each criterion runs standalone, prints one
// PASS/FAIL line, and any failure makes the binary exit nonzero.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rmm/asymptotics.hpp"
#include "rmm/cli.hpp"
#include "rmm/instance.hpp"
#include "rmm/interventions.hpp"
#include "rmm/roommate.hpp"
#include "rmm/stability.hpp"
#include "rmm/transport.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

namespace {

using namespace rmm;
using testing::Rng;

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
  if (!condition) throw CheckFailure(what);
}

std::string fixture_path(const std::string& name) {
  return std::string(RMM_FIXTURE_DIR) + "/" + name;
}

Instance load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  require(in.good(), "cannot open fixture " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

void require_runtime_below(std::chrono::steady_clock::time_point start,
                           double seconds, const std::string& label) {
  double elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  require(elapsed < seconds, label + " took " + std::to_string(elapsed) +
                                 "s, limit " + std::to_string(seconds) + "s");
}

bool blocked_by(const std::vector<Violation>& violations, std::size_t x,
                std::size_t y) {
  for (const Violation& v : violations)
    if (v.kind == Violation::Kind::kBlockingPair && v.x == x && v.y == y)
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// 1. The three-person market: verdict, exact values, and the case analysis of
//    all three candidate matchings.
void criterion_1() {
  auto start = std::chrono::steady_clock::now();
  Instance inst = load_fixture("example1.json");
  StabilityVerdict verdict = decide_stability(inst);
  require(!verdict.stable, "verdict must be unstable");
  require(verdict.w_p == Rational(8), "w_p must be 8");
  require(verdict.w_f == Rational(19, 2), "w_f must be 19/2");
  require(verdict.gap == Rational(3, 2), "gap must be 3/2");

  auto matching_of = [&](std::size_t a, std::size_t b) {
    RoommateMatching mu = all_singles_matching(inst);
    mu.mu(a, b) = mu.mu(b, a) = 1;
    mu.singles[a] -= 1;
    mu.singles[b] -= 1;
    return mu;
  };

  // Matched pair {1,2}: u3 = 0 and u1 <= 6, so {1,3} blocks at every split.
  for (long long t : {0, 3, 6}) {
    Outcome o{matching_of(0, 1), {Rational(t), Rational(6 - t), Rational(0)}};
    require(blocked_by(verify_outcome(inst, o), 0, 2),
            "pair {1,3} must block the {1,2} matching at split " +
                std::to_string(t));
  }
  // Matched pair {2,3}: u1 = 0, so both {1,2} and {1,3} block everywhere.
  for (long long t : {0, 2, 5}) {
    Outcome o{matching_of(1, 2), {Rational(0), Rational(t), Rational(5 - t)}};
    auto violations = verify_outcome(inst, o);
    require(blocked_by(violations, 0, 1) && blocked_by(violations, 0, 2),
            "pairs {1,2} and {1,3} must both block the {2,3} matching");
  }
  // Matched pair {1,3}: u2 = 0 forces u1 + u3 >= 11 > 8; some pair blocks at
  // every split of the 8.
  for (long long t : {0, 4, 6, 8}) {
    Outcome o{matching_of(0, 2), {Rational(t), Rational(0), Rational(8 - t)}};
    auto violations = verify_outcome(inst, o);
    require(blocked_by(violations, 0, 1) || blocked_by(violations, 1, 2),
            "one of {1,2}, {2,3} must block the {1,3} matching at split " +
                std::to_string(t));
  }
  require(Rational(6) + Rational(5) > Rational(8),
          "outside options must dominate the {1,3} surplus");
  require_runtime_below(start, 1.0, "criterion 1");
}

// ---------------------------------------------------------------------------
// 2. The doubled market with same-type surplus 2: stable, and both the
//    solver's payoffs and the published (9/2, 3/2, 7/2) verify exactly.
void criterion_2() {
  auto start = std::chrono::steady_clock::now();
  Instance inst = load_fixture("example1_cloned.json");
  StabilityVerdict verdict = decide_stability(inst);
  require(verdict.stable, "doubled market must be stable");
  require(verdict.w_p == Rational(19), "w_p must be 19");
  require(verdict.outcome.has_value(), "stable verdict must carry an outcome");
  require(verify_outcome(inst, *verdict.outcome).empty(),
          "constructed outcome must verify with zero violations");

  Outcome published;
  published.matching = verdict.outcome->matching;
  published.payoffs = {Rational(9, 2), Rational(3, 2), Rational(7, 2)};
  require(verify_outcome(inst, published).empty(),
          "published payoffs (9/2, 3/2, 7/2) must verify exactly");
  require_runtime_below(start, 1.0, "criterion 2");
}

// Shared corpus for criteria 3 and 4: 1000 random symmetric markets with at
// most 5 types, counts up to 4, integer surpluses in [-5, 10].
std::vector<Instance> random_corpus() {
  Rng rng(0xACCE9Cu);
  std::vector<Instance> corpus;
  corpus.reserve(1000);
  for (int i = 0; i < 1000; ++i)
    corpus.push_back(testing::random_symmetric_instance(rng, 5, 4, -5, 10));
  return corpus;
}

// ---------------------------------------------------------------------------
// 3. Half-integrality of every fractional optimum across the corpus.
void criterion_3() {
  auto start = std::chrono::steady_clock::now();
  for (const Instance& inst : random_corpus()) {
    FractionalMatching frac = half_integral_optimum(inst);
    for (std::size_t x = 0; x < inst.type_count(); ++x)
      for (std::size_t y = 0; y < inst.type_count(); ++y) {
        auto den = frac.mu(x, y).den();
        require(den == 1 || den == 2,
                "fractional entry with denominator other than 1 or 2");
      }
  }
  require_runtime_below(start, 60.0, "criterion 3");
}

// ---------------------------------------------------------------------------
// 4. Sandwich bound on the same corpus: w_p <= w_f <= w_p + |X|^2 max(phi,0).
void criterion_4() {
  for (const Instance& inst : random_corpus()) {
    Rational w_p = solve_integer_optimum(inst).value;
    Rational w_f = solve_transportation(inst).value;
    require(w_p <= w_f, "w_p must never exceed w_f");
    Rational types(static_cast<long long>(inst.type_count()));
    Rational cap = Rational::max(inst.max_surplus(), Rational(0));
    require(w_f <= w_p + types * types * cap,
            "w_f must respect the |X|^2 max(phi,0) sandwich");
  }
}

// ---------------------------------------------------------------------------
// 5. All-even markets: zero gap and a cleanly verifying outcome, 500 times.
void criterion_5() {
  Rng rng(0xE7E4u);
  for (int i = 0; i < 500; ++i) {
    Instance inst = testing::random_symmetric_instance(rng, 4, 2, -5, 10);
    for (auto& c : inst.counts) c *= 2;
    StabilityVerdict verdict = decide_stability(inst);
    require(verdict.gap.is_zero(), "all-even market must have zero gap");
    require(verdict.stable, "all-even market must be stable");
    require(verdict.outcome.has_value(), "stable market must yield an outcome");
    require(verify_outcome(inst, *verdict.outcome).empty(),
            "all-even outcome must verify cleanly");
  }
}

// ---------------------------------------------------------------------------
// 6. Oracle equivalence on 300 random markets with population <= 10.
void criterion_6() {
  Rng rng(0x0AC1E5);
  int done = 0;
  while (done < 300) {
    Instance inst = testing::random_symmetric_instance(rng, 4, 4, -5, 10);
    if (inst.population() > 10) continue;
    ++done;
    Rational fast = solve_integer_optimum(inst).value;
    Rational slow = brute_force_optimum(inst).value;
    require(fast == slow, "branch-and-bound and the exhaustive oracle differ");
    StabilityVerdict verdict = decide_stability(inst);
    require(verdict.stable == (slow == verdict.w_f),
            "stability verdict must match the oracle gap criterion");
  }
}

// ---------------------------------------------------------------------------
// 7. Removal plans on 300 random markets with at least one odd count.
void criterion_7() {
  Rng rng(0x0DD5);
  int done = 0;
  while (done < 300) {
    Instance inst = testing::random_symmetric_instance(rng, 4, 5, -5, 10);
    bool any_odd = false;
    for (long long c : inst.counts) any_odd = any_odd || (c % 2 != 0);
    if (!any_odd) continue;
    ++done;
    RemovalPlan plan = stabilize_by_removal(inst);
    long long removed = 0;
    for (int r : plan.removed) removed += r;
    require(removed >= 1 && removed <= static_cast<long long>(inst.type_count()),
            "removal count must stay within the number of types");
    if (plan.reduced.population() > 0)
      require(decide_stability(plan.reduced).stable,
              "reduced market must be stable");
    require(plan.total_cost <= plan.cost_bound,
            "total compensation must respect the |X| max(phi,0) bound");
  }
}

// ---------------------------------------------------------------------------
// 8. Ordered-roles recovery on 300 random asymmetric markets with N <= 10.
void criterion_8() {
  Rng rng(0xA57u);
  int done = 0;
  while (done < 300) {
    Instance inst = testing::random_asymmetric_instance(rng, 4, 4, -5, 10);
    if (inst.population() > 10) continue;
    ++done;
    OrderedSolveResult result = recover_ordered_matching(inst);
    Rational oracle = testing::ordered_bruteforce_optimum(inst);
    require(result.ordered.value == oracle,
            "ordered value must equal the ordered exhaustive optimum");

    Instance reduced = symmetrize(inst).instance;
    Rational w_f = solve_transportation(reduced).value;
    require(result.verdict.stable == (oracle == w_f),
            "ordered verdict must match the optimized symmetric criterion");

    for (std::size_t x = 0; x < inst.type_count(); ++x)
      for (std::size_t y = 0; y < inst.type_count(); ++y)
        if (result.ordered.pi(x, y) > 0)
          require(inst.surplus(x, y) >= inst.surplus(y, x),
                  "an emitted pair points against the better role order");
  }
}

// ---------------------------------------------------------------------------
// 9. Proportional cloning of the three-person market, k = 1..20.
void criterion_9() {
  auto start = std::chrono::steady_clock::now();
  Instance base = load_fixture("example1.json");
  GapSeries series = gap_sequence(base, 20);
  require(series.rows.size() == 20 && !series.truncated,
          "series must cover k = 1..20");
  Rational types(3);
  Rational cap = Rational::max(base.max_surplus(), Rational(0));
  for (const GapRow& row : series.rows) {
    if (row.k % 2 == 0) {
      require(row.per_capita_gap.is_zero(),
              "even k must have zero per-capita gap");
    } else {
      require(row.per_capita_gap == Rational(3, 6 * row.k),
              "odd k per-capita gap must be 3/(6k)");
    }
    require(row.per_capita_cost <= types * cap / Rational(row.population),
            "per-capita cost must respect the bound divided by N");
    require(!row.per_capita_cost.is_negative(), "cost must be nonnegative");
  }
  require_runtime_below(start, 30.0, "criterion 9");
}

// ---------------------------------------------------------------------------
// 10. Byte-identical reports on repeated runs over the full fixture set.
void criterion_10() {
  std::vector<std::vector<std::string>> invocations = {
      {"stability", fixture_path("example1.json")},
      {"stability", fixture_path("example1_cloned.json")},
      {"solve", fixture_path("example1.json")},
      {"solve", "--oracle", fixture_path("example1.json")},
      {"solve", fixture_path("example1_cloned.json")},
      {"stabilize", fixture_path("example1.json")},
      {"stabilize", fixture_path("example1_cloned.json")},
      {"symmetrize", fixture_path("example1.json")},
      {"clone", "--factor", "3", fixture_path("example1.json")},
      {"asymptotics", "--kmax", "6", fixture_path("example1.json")},
      {"asymptotics", "--kmax", "4", "--format", "json",
       fixture_path("example1_cloned.json")},
  };
  for (const auto& args : invocations) {
    std::ostringstream out1, err1, out2, err2;
    int status1 = cli::run(args, out1, err1);
    int status2 = cli::run(args, out2, err2);
    require(status1 == 0, "fixture invocation must succeed: " + args[0]);
    require(status1 == status2 && out1.str() == out2.str(),
            "repeated runs must be byte-identical for " + args[0]);
    require(!out1.str().empty(), "report must not be empty for " + args[0]);
  }
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {"1 three-person market reproduction (values + blocking analysis)",
       criterion_1},
      {"2 doubled market reproduction (stable, payoffs verify)", criterion_2},
      {"3 half-integrality over 1000 random markets", criterion_3},
      {"4 sandwich bound over the same corpus", criterion_4},
      {"5 all-even markets: zero gap, clean outcomes (500x)", criterion_5},
      {"6 oracle equivalence and gap criterion (300x, N <= 10)", criterion_6},
      {"7 removal plans: stable reductions within budget (300x)", criterion_7},
      {"8 ordered-roles recovery against the ordered oracle (300x)",
       criterion_8},
      {"9 proportional cloning series k = 1..20", criterion_9},
      {"10 byte-identical reports on repeated runs", criterion_10},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.body();
      double s = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
      std::cout << "PASS  criterion " << criterion.name << "  ["
                << static_cast<long long>(s * 1000) << " ms]\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL  criterion " << criterion.name << "  (" << e.what()
                << ")\n";
    }
  }
  if (failures == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
  } else {
    std::cout << "acceptance: " << failures << " of " << criteria.size()
              << " criteria FAILED\n";
  }
  return failures == 0 ? 0 : 1;
}
