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

#include "rmm/asymptotics.hpp"

#include <string>

#include "rmm/errors.hpp"
#include "rmm/interventions.hpp"
#include "rmm/roommate.hpp"
#include "rmm/transport.hpp"

namespace rmm {

GapSeries gap_sequence(const Instance& base, long long k_max,
                       long long node_limit) {
  if (!validate(base).ok())
    throw DomainError("gap_sequence requires a valid instance");
  if (!base.exchangeable)
    throw DomainError("gap_sequence requires an exchangeable instance");
  if (k_max < 1) throw DomainError("k_max must be a positive integer");

  GapSeries series;
  series.rows.reserve(static_cast<std::size_t>(k_max));
  for (long long k = 1; k <= k_max; ++k) {
    try {
      Instance scaled = clone(base, k);
      GapRow row;
      row.k = k;
      row.population = scaled.population();
      row.w_p = solve_integer_optimum(scaled, node_limit).value;
      row.w_f = solve_transportation(scaled).value;
      Rational cost = stabilize_by_removal(scaled).total_cost;
      if (row.population > 0) {
        Rational capita(row.population);
        row.per_capita_gap = (row.w_f - row.w_p) / capita;
        row.per_capita_cost = cost / capita;
      } else {
        row.per_capita_gap = Rational(0);
        row.per_capita_cost = Rational(0);
      }
      series.rows.push_back(std::move(row));
    } catch (const ResourceLimitError&) {
      series.truncated = true;
      series.truncated_at_k = k;
      break;
    }
  }
  return series;
}

std::string gap_series_csv(const GapSeries& series) {
  std::string out =
      "k,N,w_p,w_f,per_capita_gap,per_capita_cost,"
      "w_p_decimal,w_f_decimal,per_capita_gap_decimal,"
      "per_capita_cost_decimal\n";
  for (const GapRow& row : series.rows) {
    out += std::to_string(row.k);
    out += ',';
    out += std::to_string(row.population);
    out += ',';
    out += row.w_p.to_string();
    out += ',';
    out += row.w_f.to_string();
    out += ',';
    out += row.per_capita_gap.to_string();
    out += ',';
    out += row.per_capita_cost.to_string();
    out += ',';
    out += row.w_p.to_decimal_string();
    out += ',';
    out += row.w_f.to_decimal_string();
    out += ',';
    out += row.per_capita_gap.to_decimal_string();
    out += ',';
    out += row.per_capita_cost.to_decimal_string();
    out += '\n';
  }
  if (series.truncated) {
    out += "# truncated: solver resource limit reached at k=" +
           std::to_string(series.truncated_at_k) + "\n";
  }
  return out;
}

}  // namespace rmm
