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

#ifndef RMM_ASYMPTOTICS_HPP_
#define RMM_ASYMPTOTICS_HPP_

#include <string>
#include <vector>

#include "rmm/instance.hpp"
#include "rmm/rational.hpp"
#include "rmm/roommate.hpp"

namespace rmm {

struct GapRow {
  long long k = 0;
  long long population = 0;  // N_k = k * N_base
  Rational w_p;
  Rational w_f;
  Rational per_capita_gap;   // (w_f - w_p) / N_k
  Rational per_capita_cost;  // removal compensation total / N_k
};

/// Proportional-cloning series: row k describes the market with every count
/// multiplied by k. The per-capita gap vanishes as k grows and is exactly 0
/// whenever all scaled counts are even.
struct GapSeries {
  std::vector<GapRow> rows;
  /// True when a solver resource limit cut the series short; rows then cover
  /// k = 1 .. truncated_at_k - 1.
  bool truncated = false;
  long long truncated_at_k = 0;
};

/// Solves clone(base, k) for k = 1..k_max, reporting exact optima, per-capita
/// stability gap, and per-capita stabilization cost. On solver exhaustion the
/// series is returned truncated instead of failing outright.
GapSeries gap_sequence(const Instance& base, long long k_max,
                       long long node_limit = kBranchAndBoundNodeLimit);

/// CSV rendering: one row per k with exact "p/q" cells followed by decimal
/// twins, and a trailing "# truncated" marker line when the series is
/// partial.
std::string gap_series_csv(const GapSeries& series);

}  // namespace rmm

#endif  // RMM_ASYMPTOTICS_HPP_
