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

#include "rmm/rational.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "rmm/errors.hpp"

namespace rmm {
namespace {

using Int = Rational::Int;
using UInt = unsigned __int128;

// Magnitude cap for numerator and denominator. Leaving headroom below 2^127
// keeps the decimal long-division loop (remainder * 10) inside the type.
constexpr Int kMagnitudeCap = Int(1) << 120;
constexpr Int kInt128Min = -(Int(1) << 126) - (Int(1) << 126);

[[noreturn]] void throw_overflow() {
  throw RationalOverflowError(
      "exact rational exceeds the supported magnitude (about 36 decimal "
      "digits)");
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow();
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow();
  return r;
}

UInt uabs(Int v) { return v < 0 ? UInt(0) - UInt(v) : UInt(v); }

UInt gcd_u(UInt a, UInt b) {
  while (b != 0) {
    UInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// 256-bit product of two unsigned 128-bit values, schoolbook on 64-bit limbs.
struct U256 {
  UInt hi;
  UInt lo;
};

U256 mul_full(UInt a, UInt b) {
  const UInt mask = (UInt(1) << 64) - 1;
  UInt a0 = a & mask, a1 = a >> 64;
  UInt b0 = b & mask, b1 = b >> 64;
  UInt p00 = a0 * b0;
  UInt p01 = a0 * b1;
  UInt p10 = a1 * b0;
  UInt p11 = a1 * b1;
  UInt mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
  U256 r;
  r.lo = (mid << 64) | (p00 & mask);
  r.hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return r;
}

int cmp_u256(U256 a, U256 b) {
  if (a.hi != b.hi) return a.hi < b.hi ? -1 : 1;
  if (a.lo != b.lo) return a.lo < b.lo ? -1 : 1;
  return 0;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  *this = from_parts(Int(num), Int(den));
}

Rational Rational::from_parts(Int num, Int den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  // Int min has no representable negation; it is far beyond the cap anyway.
  if (num == kInt128Min || den == kInt128Min) throw_overflow();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    Rational r;
    return r;
  }
  UInt g = gcd_u(uabs(num), UInt(den));
  if (g > 1) {
    num = num < 0 ? -Int(uabs(num) / g) : Int(UInt(num) / g);
    den = Int(UInt(den) / g);
  }
  if (uabs(num) >= UInt(kMagnitudeCap) || UInt(den) >= UInt(kMagnitudeCap)) {
    throw_overflow();
  }
  Rational r;
  r.num_ = num;
  r.den_ = den;
  return r;
}

Rational Rational::operator-() const { return from_parts(-num_, den_); }

Rational Rational::operator+(const Rational& other) const {
  UInt g = gcd_u(UInt(den_), UInt(other.den_));
  Int da = Int(UInt(den_) / g);
  Int db = Int(UInt(other.den_) / g);
  Int num = checked_add(checked_mul(num_, db), checked_mul(other.num_, da));
  Int den = checked_mul(den_, db);
  return from_parts(num, den);
}

Rational Rational::operator-(const Rational& other) const {
  return *this + (-other);
}

Rational Rational::operator*(const Rational& other) const {
  UInt g1 = gcd_u(uabs(num_), UInt(other.den_));
  UInt g2 = gcd_u(uabs(other.num_), UInt(den_));
  Int an = num_ < 0 ? -Int(uabs(num_) / g1) : Int(UInt(num_) / g1);
  Int bn = other.num_ < 0 ? -Int(uabs(other.num_) / g2)
                          : Int(UInt(other.num_) / g2);
  Int ad = Int(UInt(den_) / g2);
  Int bd = Int(UInt(other.den_) / g1);
  return from_parts(checked_mul(an, bn), checked_mul(ad, bd));
}

Rational Rational::operator/(const Rational& other) const {
  if (other.num_ == 0) throw DomainError("rational division by zero");
  return from_parts(checked_mul(num_, other.den_),
                    checked_mul(den_, other.num_));
}

bool Rational::operator<(const Rational& other) const {
  if (num_ < 0 && other.num_ >= 0) return true;
  if (num_ >= 0 && other.num_ < 0) return false;
  // Same sign: compare |a.num| * b.den against |b.num| * a.den in 256 bits,
  // flipping the verdict for negatives.
  U256 lhs = mul_full(uabs(num_), UInt(other.den_));
  U256 rhs = mul_full(uabs(other.num_), UInt(den_));
  int c = cmp_u256(lhs, rhs);
  return num_ < 0 ? c > 0 : c < 0;
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational::Int Rational::floor() const {
  Int q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational::Int Rational::ceil() const {
  Int q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::to_string() const {
  if (den_ == 1) return int128_to_string(num_);
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

std::string Rational::to_decimal_string(int significant_digits) const {
  if (num_ == 0) return "0";
  if (significant_digits < 1) significant_digits = 1;

  UInt d = UInt(den_);
  UInt n = uabs(num_);
  UInt q = n / d;
  UInt r = n % d;
  std::string int_digits = int128_to_string(Int(q));

  std::vector<char> frac;
  int significant_used =
      (q == 0) ? 0 : static_cast<int>(int_digits.size());
  bool rounded_up = false;
  while (r != 0) {
    if (significant_used >= significant_digits) {
      // Round half away from zero on the first dropped digit.
      rounded_up = 2 * r >= d;
      break;
    }
    r *= 10;
    char digit = static_cast<char>('0' + int(r / d));
    r %= d;
    frac.push_back(digit);
    if (significant_used > 0 || digit != '0') ++significant_used;
  }
  if (rounded_up) {
    int i = static_cast<int>(frac.size()) - 1;
    for (; i >= 0; --i) {
      if (frac[i] != '9') {
        ++frac[i];
        break;
      }
      frac[i] = '0';
    }
    if (i < 0) {
      // Carry into the integer part.
      int j = static_cast<int>(int_digits.size()) - 1;
      for (; j >= 0; --j) {
        if (int_digits[j] != '9') {
          ++int_digits[j];
          break;
        }
        int_digits[j] = '0';
      }
      if (j < 0) int_digits.insert(int_digits.begin(), '1');
    }
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();

  std::string out;
  if (num_ < 0) out.push_back('-');
  out += int_digits;
  if (!frac.empty()) {
    out.push_back('.');
    out.append(frac.begin(), frac.end());
  }
  return out;
}

namespace {

std::optional<Int> parse_digits(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  Int value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    value = checked_mul(value, 10);
    value = checked_add(value, c - '0');
    if (value >= kMagnitudeCap) throw_overflow();
  }
  return value;
}

Int pow10_checked(long long exponent) {
  Int v = 1;
  for (long long i = 0; i < exponent; ++i) {
    v = checked_mul(v, 10);
    if (v >= kMagnitudeCap) throw_overflow();
  }
  return v;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part = text.substr(slash + 1);
    bool negative = false;
    if (!num_part.empty() && (num_part.front() == '-' || num_part.front() == '+')) {
      negative = num_part.front() == '-';
      num_part.remove_prefix(1);
    }
    auto p = parse_digits(num_part);
    auto q = parse_digits(den_part);
    if (!p || !q || *q == 0) return std::nullopt;
    return from_parts(negative ? -*p : *p, *q);
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view mantissa = text;
  long long exponent = 0;
  auto epos = text.find_first_of("eE");
  if (epos != std::string_view::npos) {
    mantissa = text.substr(0, epos);
    std::string_view exp_part = text.substr(epos + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    auto e = parse_digits(exp_part);
    if (!e) return std::nullopt;
    if (*e > 200) throw_overflow();
    exponent = exp_negative ? -static_cast<long long>(*e)
                            : static_cast<long long>(*e);
  }

  std::string_view int_part = mantissa;
  std::string_view frac_part;
  auto dot = mantissa.find('.');
  if (dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  std::string all_digits;
  all_digits.reserve(int_part.size() + frac_part.size());
  all_digits.append(int_part);
  all_digits.append(frac_part);
  auto digits = parse_digits(all_digits);
  if (!digits) return std::nullopt;

  long long scale = exponent - static_cast<long long>(frac_part.size());
  Int num = negative ? -*digits : *digits;
  if (scale >= 0) {
    return from_parts(checked_mul(num, pow10_checked(scale)), 1);
  }
  return from_parts(num, pow10_checked(-scale));
}

std::string int128_to_string(__int128 value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  UInt v = negative ? UInt(0) - UInt(value) : UInt(value);
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + int(v % 10)));
    v /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace rmm
