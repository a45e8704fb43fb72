// Copyright 2026 The mfrac Authors
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mfrac {

// Expression templates off: values are stored eagerly, which keeps `auto` and
// comparisons between temporaries well defined.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline int sign(const BigInt& x) { return x.sign(); }

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Quotient rounded toward negative infinity. Requires den > 0.
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r < 0) --q;
  return q;
}

/// Quotient rounded toward positive infinity. Requires den > 0.
inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r > 0) ++q;
  return q;
}

inline BigInt pow10(unsigned k) {
  return boost::multiprecision::pow(BigInt(10), k);
}

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

/// floor(sqrt(n)) by Newton iteration, started above the root so the
/// iterates decrease monotonically.
inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  if (n < 2) return n;
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  BigInt x = BigInt(1) << ((bits + 1) / 2);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  // Quadratic-residue filter mod 64 rejects most non-squares cheaply.
  constexpr std::uint64_t kSquaresMod64 = [] {
    std::uint64_t mask = 0;
    for (unsigned i = 0; i < 64; ++i) mask |= std::uint64_t{1} << ((i * i) % 64);
    return mask;
  }();
  const auto low = static_cast<unsigned>(n & 63);
  if (((kSquaresMod64 >> low) & 1U) == 0) return false;
  BigInt r = isqrt(n);
  if (r * r != n) return false;
  if (root != nullptr) *root = std::move(r);
  return true;
}

/// Number of decimal digits of |x| (1 for zero).
inline unsigned decimal_digits(const BigInt& x) {
  return static_cast<unsigned>(abs(x).str().size());
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Parses an optionally signed decimal integer; throws std::invalid_argument
/// naming the token on malformed input.
inline BigInt parse_bigint(std::string_view token) {
  std::string_view digits = token;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("malformed integer '" + std::string(token) + "'");
  }
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("malformed integer '" + std::string(token) + "'");
    }
  }
  const BigInt value{std::string(digits)};
  return negative ? BigInt(-value) : value;
}

}  // namespace mfrac
