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

#ifndef RMM_INSTANCE_HPP_
#define RMM_INSTANCE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rmm/matrix.hpp"
#include "rmm/rational.hpp"

namespace rmm {

/// Market data: a finite set of types, a population count per type, and the
/// joint surplus each ordered pair of types can create (singles earn 0).
///
/// Instances are plain immutable data once built; every solver takes them by
/// const reference and keeps no shared state, so concurrent solves on one
/// instance are safe.
struct Instance {
  std::vector<std::string> type_labels;
  std::vector<long long> counts;
  SquareMatrix<Rational> surplus;
  /// True when partner roles are interchangeable, i.e. the surplus matrix is
  /// symmetric. Solvers that assume exchangeability check this flag.
  bool exchangeable = true;

  std::size_t type_count() const { return type_labels.size(); }

  long long population() const {
    long long total = 0;
    for (long long c : counts) total += c;
    return total;
  }

  /// Largest surplus entry; the cost and gap bounds are stated in terms of it.
  Rational max_surplus() const;

  bool surplus_is_symmetric() const { return surplus.is_symmetric(); }

  bool operator==(const Instance&) const = default;
};

struct ValidationIssue {
  std::string code;
  std::string message;
};

/// Outcome of structural validation. Issues are data, not exceptions:
/// an invalid instance yields a non-empty `errors` list.
struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool ok() const { return errors.empty(); }
  bool has_error(std::string_view code) const;
};

/// Parses the JSON instance document. Every numeric literal is converted from
/// its decimal text straight to an exact rational; no floating-point value is
/// ever materialized. A missing "exchangeable" key is inferred from matrix
/// symmetry. Throws ParseError on malformed documents, shape mismatches,
/// negative counts, or unusable numbers.
Instance parse_instance(std::string_view text);

/// Serializes an instance back to its document form. Integer surpluses are
/// emitted as JSON integers and all other rationals as exact "p/q" strings,
/// so parse(emit(x)) == x.
std::string emit_instance(const Instance& inst);

ValidationReport validate(const Instance& inst);

/// Result of reducing an ordered-roles market to its exchangeable form.
/// `order_preference(x, y)` is 1 when assigning role order (x, y) attains the
/// pair's maximal surplus; ties make both ordered cells 1.
struct SymmetrizeResult {
  Instance instance;
  SquareMatrix<unsigned char> order_preference;
};

/// Replaces the surplus with max(phi_xy, phi_yx) per pair, which is the
/// exchangeable market the ordered-roles problem reduces to. Idempotent on
/// symmetric input.
SymmetrizeResult symmetrize(const Instance& inst);

}  // namespace rmm

#endif  // RMM_INSTANCE_HPP_
