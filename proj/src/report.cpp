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

#include "rmm/report.hpp"

#include <cstdint>
#include <limits>

namespace rmm {
namespace {

Json rational_matrix_json(const SquareMatrix<Rational>& matrix) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < matrix.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < matrix.size(); ++y)
      row.push_back(rational_json(matrix(x, y)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json count_matrix_json(const SquareMatrix<long long>& matrix) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < matrix.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < matrix.size(); ++y)
      row.push_back(matrix(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json rational_json(const Rational& value) {
  Json j;
  j["exact"] = value.to_string();
  j["decimal"] = value.to_decimal_string();
  return j;
}

Json instance_json(const Instance& inst) {
  Json j;
  j["types"] = inst.type_labels;
  j["counts"] = inst.counts;
  Json rows = Json::array();
  const std::size_t m = inst.surplus.size();
  for (std::size_t x = 0; x < m; ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < m; ++y) {
      const Rational& value = inst.surplus(x, y);
      constexpr auto kInt64Max = std::numeric_limits<std::int64_t>::max();
      if (value.is_integer() && value.num() <= Rational::Int(kInt64Max) &&
          value.num() >= -Rational::Int(kInt64Max)) {
        row.push_back(static_cast<std::int64_t>(value.num()));
      } else {
        row.push_back(value.to_string());
      }
    }
    rows.push_back(std::move(row));
  }
  j["surplus"] = std::move(rows);
  j["exchangeable"] = inst.exchangeable;
  j["phi_max"] = rational_json(inst.max_surplus());
  return j;
}

Json matching_json(const RoommateMatching& matching) {
  Json j;
  j["pairs"] = count_matrix_json(matching.mu);
  j["singles"] = matching.singles;
  return j;
}

Json verdict_json(const StabilityVerdict& verdict) {
  Json j;
  j["stable"] = verdict.stable;
  j["w_p"] = rational_json(verdict.w_p);
  j["w_f"] = rational_json(verdict.w_f);
  j["gap"] = rational_json(verdict.gap);
  return j;
}

Json certificate_json(const Certificate& cert) {
  Json j;
  Json payoffs = Json::array();
  for (const Rational& u : cert.payoffs) payoffs.push_back(rational_json(u));
  j["payoffs"] = std::move(payoffs);
  j["multipliers"] = rational_matrix_json(cert.multipliers);
  j["objective"] = rational_json(cert.objective);
  return j;
}

Json removal_json(const RemovalPlan& plan, bool reduced_stable) {
  Json j;
  j["removed"] = plan.removed;
  j["reduced_counts"] = plan.reduced.counts;
  Json compensation = Json::array();
  for (const Rational& c : plan.compensation)
    compensation.push_back(rational_json(c));
  j["compensation"] = std::move(compensation);
  j["total_cost"] = rational_json(plan.total_cost);
  j["cost_bound"] = rational_json(plan.cost_bound);
  j["reduced_stable"] = reduced_stable;
  return j;
}

Json ordered_matching_json(const OrderedMatching& ordered) {
  Json j;
  j["pi"] = count_matrix_json(ordered.pi);
  j["value"] = rational_json(ordered.value);
  return j;
}

Json provenance_json(const std::string& command_line) {
  Json j;
  j["tool"] = std::string(kToolName) + " " + kToolVersion;
  j["command"] = command_line;
  return j;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace rmm
