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

#include "rmm/instance.hpp"

#include <cstdint>
#include <limits>
#include <set>
#include <utility>

#include <json.hpp>

#include "rmm/errors.hpp"

namespace rmm {

Rational Instance::max_surplus() const {
  const std::size_t m = surplus.size();
  if (m == 0) return Rational(0);
  Rational best = surplus(0, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      best = Rational::max(best, surplus(x, y));
  return best;
}

bool ValidationReport::has_error(std::string_view code) const {
  for (const auto& issue : errors)
    if (issue.code == code) return true;
  return false;
}

namespace {

// Minimal JSON value tree with exact rational leaves. Built through the SAX
// interface so that number tokens reach us as source text, never as doubles.
struct JsonValue {
  enum class Kind { kNull, kBool, kNumber, kString, kArray, kObject };

  Kind kind = Kind::kNull;
  bool boolean = false;
  Rational number;
  std::string text;
  std::vector<JsonValue> items;
  std::vector<std::pair<std::string, JsonValue>> members;

  const JsonValue* find(std::string_view key) const {
    for (const auto& [k, v] : members)
      if (k == key) return &v;
    return nullptr;
  }
};

class ExactJsonBuilder {
 public:
  bool null() { return add(JsonValue{}); }

  bool boolean(bool value) {
    JsonValue v;
    v.kind = JsonValue::Kind::kBool;
    v.boolean = value;
    return add(std::move(v));
  }

  bool number_integer(std::int64_t value) {
    JsonValue v;
    v.kind = JsonValue::Kind::kNumber;
    v.number = Rational(value);
    return add(std::move(v));
  }

  bool number_unsigned(std::uint64_t value) {
    JsonValue v;
    v.kind = JsonValue::Kind::kNumber;
    v.number = Rational::from_parts(Rational::Int(value), 1);
    return add(std::move(v));
  }

  bool number_float(double, const std::string& raw) {
    auto parsed = Rational::parse(raw);
    if (!parsed) {
      error_ = "unusable number literal '" + raw + "'";
      return false;
    }
    JsonValue v;
    v.kind = JsonValue::Kind::kNumber;
    v.number = *parsed;
    return add(std::move(v));
  }

  bool string(std::string& value) {
    JsonValue v;
    v.kind = JsonValue::Kind::kString;
    v.text = value;
    return add(std::move(v));
  }

  bool binary(nlohmann::json::binary_t&) {
    error_ = "binary values are not part of the instance format";
    return false;
  }

  bool start_object(std::size_t) {
    JsonValue v;
    v.kind = JsonValue::Kind::kObject;
    return open(std::move(v));
  }

  bool key(std::string& value) {
    pending_key_ = value;
    return true;
  }

  bool end_object() { return close(); }

  bool start_array(std::size_t) {
    JsonValue v;
    v.kind = JsonValue::Kind::kArray;
    return open(std::move(v));
  }

  bool end_array() { return close(); }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::json::exception& ex) {
    error_ = "JSON syntax error near byte " + std::to_string(position) + ": " +
             ex.what();
    return false;
  }

  const std::string& error() const { return error_; }
  JsonValue take_root() { return std::move(root_); }

 private:
  bool add(JsonValue&& v) {
    if (stack_.empty()) {
      root_ = std::move(v);
      return true;
    }
    JsonValue* top = stack_.back();
    if (top->kind == JsonValue::Kind::kArray) {
      top->items.push_back(std::move(v));
    } else {
      top->members.emplace_back(std::move(pending_key_), std::move(v));
    }
    return true;
  }

  bool open(JsonValue&& v) {
    if (stack_.empty()) {
      root_ = std::move(v);
      stack_.push_back(&root_);
      return true;
    }
    JsonValue* top = stack_.back();
    if (top->kind == JsonValue::Kind::kArray) {
      top->items.push_back(std::move(v));
      stack_.push_back(&top->items.back());
    } else {
      top->members.emplace_back(std::move(pending_key_), std::move(v));
      stack_.push_back(&top->members.back().second);
    }
    return true;
  }

  bool close() {
    stack_.pop_back();
    return true;
  }

  JsonValue root_;
  std::vector<JsonValue*> stack_;
  std::string pending_key_;
  std::string error_;
};

JsonValue parse_exact_json(std::string_view text) {
  ExactJsonBuilder builder;
  bool ok;
  try {
    ok = nlohmann::json::sax_parse(text, &builder);
  } catch (const RationalOverflowError& e) {
    throw ParseError(std::string("number out of range: ") + e.what());
  }
  if (!ok) {
    throw ParseError(builder.error().empty() ? "malformed JSON document"
                                             : builder.error());
  }
  return builder.take_root();
}

Rational rational_from_json(const JsonValue& v, const std::string& where) {
  if (v.kind == JsonValue::Kind::kNumber) return v.number;
  if (v.kind == JsonValue::Kind::kString) {
    std::optional<Rational> parsed;
    try {
      parsed = Rational::parse(v.text);
    } catch (const RationalOverflowError& e) {
      throw ParseError("number out of range in " + where + ": " + e.what());
    }
    if (!parsed)
      throw ParseError("unusable rational literal '" + v.text + "' in " +
                       where);
    return *parsed;
  }
  throw ParseError(where + " entries must be numbers or \"p/q\" strings");
}

[[noreturn]] void throw_validation(const ValidationReport& report) {
  std::string message = "invalid instance:";
  for (const auto& issue : report.errors)
    message += " [" + issue.code + "] " + issue.message;
  throw ParseError(message);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  JsonValue root = parse_exact_json(text);
  if (root.kind != JsonValue::Kind::kObject)
    throw ParseError("instance document must be a JSON object");

  const JsonValue* types = root.find("types");
  const JsonValue* counts = root.find("counts");
  const JsonValue* surplus = root.find("surplus");
  if (!types || types->kind != JsonValue::Kind::kArray)
    throw ParseError("missing or non-array \"types\"");
  if (!counts || counts->kind != JsonValue::Kind::kArray)
    throw ParseError("missing or non-array \"counts\"");
  if (!surplus || surplus->kind != JsonValue::Kind::kArray)
    throw ParseError("missing or non-array \"surplus\"");

  Instance inst;
  inst.type_labels.reserve(types->items.size());
  for (const auto& item : types->items) {
    if (item.kind != JsonValue::Kind::kString)
      throw ParseError("\"types\" entries must be strings");
    inst.type_labels.push_back(item.text);
  }

  for (const auto& item : counts->items) {
    if (item.kind != JsonValue::Kind::kNumber || !item.number.is_integer())
      throw ParseError("\"counts\" entries must be integers");
    if (item.number.is_negative())
      throw ParseError("negative count " + item.number.to_string());
    if (item.number.num() > std::numeric_limits<long long>::max() / 4)
      throw ParseError("count " + item.number.to_string() + " is too large");
    inst.counts.push_back(static_cast<long long>(item.number.num()));
  }

  const std::size_t m = inst.type_labels.size();
  if (surplus->items.size() != m)
    throw ParseError("\"surplus\" must have one row per type");
  inst.surplus = SquareMatrix<Rational>(m);
  for (std::size_t x = 0; x < m; ++x) {
    const JsonValue& row = surplus->items[x];
    if (row.kind != JsonValue::Kind::kArray || row.items.size() != m)
      throw ParseError("\"surplus\" row " + std::to_string(x) +
                       " must have one entry per type");
    for (std::size_t y = 0; y < m; ++y)
      inst.surplus(x, y) = rational_from_json(row.items[y], "\"surplus\"");
  }

  const JsonValue* exchangeable = root.find("exchangeable");
  if (exchangeable) {
    if (exchangeable->kind != JsonValue::Kind::kBool)
      throw ParseError("\"exchangeable\" must be a boolean");
    inst.exchangeable = exchangeable->boolean;
  } else {
    inst.exchangeable = inst.surplus_is_symmetric();
  }

  ValidationReport report = validate(inst);
  if (!report.ok()) throw_validation(report);
  return inst;
}

std::string emit_instance(const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["types"] = inst.type_labels;
  doc["counts"] = inst.counts;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const std::size_t m = inst.surplus.size();
  for (std::size_t x = 0; x < m; ++x) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
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
  doc["surplus"] = std::move(rows);
  doc["exchangeable"] = inst.exchangeable;
  return doc.dump(2) + "\n";
}

ValidationReport validate(const Instance& inst) {
  ValidationReport report;
  auto error = [&report](std::string code, std::string message) {
    report.errors.push_back({std::move(code), std::move(message)});
  };

  const std::size_t m = inst.type_labels.size();
  if (m == 0) error("empty_types", "at least one type is required");

  std::set<std::string_view> seen;
  for (const auto& label : inst.type_labels) {
    if (!seen.insert(label).second)
      error("duplicate_label", "type label '" + label + "' appears twice");
  }

  if (inst.counts.size() != m) {
    error("dimension_mismatch",
          "counts has " + std::to_string(inst.counts.size()) +
              " entries for " + std::to_string(m) + " types");
  }
  if (inst.surplus.size() != m) {
    error("dimension_mismatch",
          "surplus is " + std::to_string(inst.surplus.size()) + "x" +
              std::to_string(inst.surplus.size()) + " for " +
              std::to_string(m) + " types");
  }

  bool any_positive_count = false;
  for (std::size_t i = 0; i < inst.counts.size(); ++i) {
    if (inst.counts[i] < 0) {
      error("negative_count", "count for type index " + std::to_string(i) +
                                  " is " + std::to_string(inst.counts[i]));
    } else if (inst.counts[i] > 0) {
      any_positive_count = true;
    }
  }

  if (inst.exchangeable && !inst.surplus_is_symmetric()) {
    error("asymmetric_exchangeable",
          "exchangeable is true but the surplus matrix is not symmetric");
  }

  if (report.errors.empty() && !any_positive_count) {
    report.warnings.push_back(
        {"zero_population", "every type has a zero count"});
  }
  return report;
}

SymmetrizeResult symmetrize(const Instance& inst) {
  const std::size_t m = inst.surplus.size();
  SymmetrizeResult result;
  result.instance = inst;
  result.instance.exchangeable = true;
  result.order_preference = SquareMatrix<unsigned char>(m, 0);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const Rational& forward = inst.surplus(x, y);
      const Rational& reverse = inst.surplus(y, x);
      result.instance.surplus(x, y) = Rational::max(forward, reverse);
      result.order_preference(x, y) = forward >= reverse ? 1 : 0;
    }
  }
  return result;
}

}  // namespace rmm
