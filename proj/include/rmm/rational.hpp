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

#ifndef RMM_RATIONAL_HPP_
#define RMM_RATIONAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rmm {

/// Exact rational number backed by 128-bit integers.
///
/// Values are kept normalized: the denominator is positive and the fraction is
/// fully reduced. Numerator and denominator magnitudes are capped at 2^120
/// (about 36 decimal digits); any operation that would exceed the cap throws
/// RationalOverflowError instead of silently losing precision. Every
/// arithmetic result is exact, which is what makes equality tests between
/// optimal values meaningful.
class Rational {
 public:
  using Int = __int128;

  constexpr Rational() = default;
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit
  Rational(long long num, long long den);

  /// Builds a rational from raw 128-bit parts, normalizing them.
  static Rational from_parts(Int num, Int den);

  /// Parses "p/q", integer, or decimal text ("-3", "2.5", "1e3", "7/2") into
  /// an exact rational without any floating-point intermediate. Returns
  /// nullopt on malformed text; throws RationalOverflowError when the value
  /// does not fit.
  static std::optional<Rational> parse(std::string_view text);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rational operator-() const;
  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  Rational operator/(const Rational& other) const;

  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator-=(const Rational& other) { return *this = *this - other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }
  Rational& operator/=(const Rational& other) { return *this = *this / other; }

  bool operator==(const Rational& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const Rational& other) const { return !(*this == other); }
  bool operator<(const Rational& other) const;
  bool operator>(const Rational& other) const { return other < *this; }
  bool operator<=(const Rational& other) const { return !(other < *this); }
  bool operator>=(const Rational& other) const { return !(*this < other); }

  Rational abs() const;
  /// Largest integer not above the value.
  Int floor() const;
  /// Smallest integer not below the value.
  Int ceil() const;

  /// Renders "p" for integers and "p/q" otherwise; exact round-trip format.
  std::string to_string() const;

  /// Decimal rendering. The integer part is always exact; a non-terminating
  /// fractional expansion is rounded to `significant_digits` significant
  /// digits (round half away from zero), trailing zeros trimmed.
  std::string to_decimal_string(int significant_digits = 12) const;

  static Rational min(const Rational& a, const Rational& b) {
    return b < a ? b : a;
  }
  static Rational max(const Rational& a, const Rational& b) {
    return a < b ? b : a;
  }

 private:
  Int num_ = 0;
  Int den_ = 1;
};

/// Decimal rendering of a raw 128-bit integer.
std::string int128_to_string(__int128 value);

}  // namespace rmm

#endif  // RMM_RATIONAL_HPP_
