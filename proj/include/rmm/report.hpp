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

#ifndef RMM_REPORT_HPP_
#define RMM_REPORT_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "rmm/instance.hpp"
#include "rmm/interventions.hpp"
#include "rmm/roommate.hpp"
#include "rmm/stability.hpp"

namespace rmm {

inline constexpr const char* kToolName = "rmmatch";
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// Every rational in a report carries its exact form next to a 12-digit
/// decimal rendering; verdicts must never be read off rounded text.
Json rational_json(const Rational& value);

/// Complete instance echo: labels, counts, surplus, exchangeable flag, and
/// the maximal surplus entry. Re-solving the echo reproduces the verdict.
Json instance_json(const Instance& inst);

Json matching_json(const RoommateMatching& matching);
Json verdict_json(const StabilityVerdict& verdict);
Json certificate_json(const Certificate& cert);
Json removal_json(const RemovalPlan& plan, bool reduced_stable);
Json ordered_matching_json(const OrderedMatching& ordered);

/// Provenance block: tool identity and the command line that produced the
/// report. Contains no timestamps, so identical invocations yield identical
/// bytes.
Json provenance_json(const std::string& command_line);

/// Final serialization used everywhere: two-space indent plus newline.
std::string dump_report(const Json& report);

}  // namespace rmm

#endif  // RMM_REPORT_HPP_
