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

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "mfrac/bigint.hpp"

namespace mfrac {

/// Reduced rational number p/q with q >= 1 and gcd(|p|, q) = 1. Zero is 0/1.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Canonical fraction num/den. Throws std::domain_error when den == 0.
  static Fraction reduce(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) return Fraction();
    BigInt g = gcd(num, den);
    if (g != 1) {
      num /= g;
      den /= g;
    }
    return Fraction(std::move(num), std::move(den), Trusted{});
  }

  /// Accepts "p/q" or "p" with an optional sign on either part.
  /// Malformed tokens throw std::invalid_argument naming the token; a zero
  /// denominator throws std::domain_error.
  static Fraction parse(std::string_view token) {
    const auto slash = token.find('/');
    try {
      if (slash == std::string_view::npos) return Fraction(parse_bigint(token));
      return reduce(parse_bigint(token.substr(0, slash)), parse_bigint(token.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed fraction '" + std::string(token) + "'");
    }
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return ceil_div(num_, den_); }

  Fraction abs() const { return Fraction(mfrac::abs(num_), den_, Trusted{}); }

  std::string str() const { return num_.str() + "/" + den_.str(); }

  double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

  Fraction operator-() const { return Fraction(-num_, den_, Trusted{}); }

  friend Fraction operator+(const Fraction& x, const Fraction& y) {
    return reduce(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Fraction operator-(const Fraction& x, const Fraction& y) {
    return reduce(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Fraction operator*(const Fraction& x, const Fraction& y) {
    return reduce(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Fraction operator/(const Fraction& x, const Fraction& y) {
    if (y.num_ == 0) throw std::domain_error("division by zero fraction");
    return reduce(x.num_ * y.den_, x.den_ * y.num_);
  }
  Fraction& operator+=(const Fraction& y) { return *this = *this + y; }
  Fraction& operator-=(const Fraction& y) { return *this = *this - y; }

  friend bool operator==(const Fraction& x, const Fraction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
    const int c = (x.num_ * y.den_).compare(y.num_ * x.den_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

 private:
  struct Trusted {};
  Fraction(BigInt num, BigInt den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

/// (a1 + a2)/(b1 + b2), reduced.
inline Fraction farey_mediant(const Fraction& f1, const Fraction& f2) {
  return Fraction::reduce(f1.num() + f2.num(), f1.den() + f2.den());
}

/// |a1*b2 - a2*b1| == 1.
inline bool farey_neighbors(const Fraction& f1, const Fraction& f2) {
  return abs(f1.num() * f2.den() - f2.num() * f1.den()) == 1;
}

}  // namespace mfrac
