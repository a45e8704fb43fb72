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

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "mfrac/bigint.hpp"
#include "mfrac/fraction.hpp"

namespace mfrac {

/// m / 2^n with m odd or n == 0.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(BigInt m, unsigned n) : m_(std::move(m)), n_(n) { normalize(); }
  DyadicRational(long long m) : m_(m) {}  // NOLINT(google-explicit-constructor)

  /// Accepts "M/2^N", "M/Q" with Q a power of two, or an integer.
  static DyadicRational parse(std::string_view token) {
    const auto caret = token.find("/2^");
    if (caret != std::string_view::npos) {
      const std::string_view exponent = token.substr(caret + 3);
      BigInt n;
      try {
        n = parse_bigint(exponent);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed dyadic rational '" + std::string(token) + "'");
      }
      if (n < 0 || n > 1'000'000) {
        throw std::invalid_argument("malformed dyadic rational '" + std::string(token) + "'");
      }
      try {
        return DyadicRational(parse_bigint(token.substr(0, caret)), n.convert_to<unsigned>());
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed dyadic rational '" + std::string(token) + "'");
      }
    }
    const Fraction f = Fraction::parse(token);
    const auto d = from_fraction(f);
    if (!d) throw std::domain_error("not a dyadic rational: " + f.str());
    return *d;
  }

  /// Returns the dyadic value of f when its denominator is a power of two.
  static std::optional<DyadicRational> from_fraction(const Fraction& f) {
    const BigInt& q = f.den();
    if ((q & (q - 1)) != 0) return std::nullopt;
    return DyadicRational(f.num(), boost::multiprecision::msb(q));
  }

  const BigInt& numerator() const { return m_; }
  unsigned exponent() const { return n_; }

  Fraction to_fraction() const { return Fraction::reduce(m_, pow2(n_)); }

  std::string str() const { return m_.str() + "/2^" + std::to_string(n_); }

  /// Binary expansion "0.b1b2..." for values in [0, 1); "1" and "0" for the
  /// endpoints.
  std::string binary_string() const {
    if (m_ == 0) return "0";
    if (n_ == 0) return m_.str();
    if (m_ < 0 || m_ >= pow2(n_)) return str();
    std::string digits = "0.";
    for (unsigned i = n_; i-- > 0;) digits.push_back(bit_test(m_, i) ? '1' : '0');
    return digits;
  }

  DyadicRational operator-() const { return DyadicRational(-m_, n_); }

  friend DyadicRational operator+(const DyadicRational& x, const DyadicRational& y) {
    const unsigned n = std::max(x.n_, y.n_);
    return DyadicRational((x.m_ << (n - x.n_)) + (y.m_ << (n - y.n_)), n);
  }
  friend DyadicRational operator-(const DyadicRational& x, const DyadicRational& y) {
    return x + (-y);
  }

  /// Arithmetic mean (x + y) / 2.
  friend DyadicRational mean(const DyadicRational& x, const DyadicRational& y) {
    DyadicRational sum = x + y;
    return DyadicRational(sum.m_, sum.n_ + 1);
  }

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& x, const DyadicRational& y) {
    const unsigned n = std::max(x.n_, y.n_);
    const int c = (x.m_ << (n - x.n_)).compare(y.m_ << (n - y.n_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const DyadicRational& d) {
    return os << d.str();
  }

 private:
  void normalize() {
    if (m_ == 0) {
      n_ = 0;
      return;
    }
    const unsigned twos = boost::multiprecision::lsb(abs(m_));
    const unsigned shift = std::min(twos, n_);
    m_ >>= shift;  // exact: m_ has at least `shift` trailing zero bits
    n_ -= shift;
  }

  BigInt m_{0};
  unsigned n_{0};
};

}  // namespace mfrac
