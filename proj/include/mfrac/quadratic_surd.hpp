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

#include <array>
#include <cmath>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfrac/bigint.hpp"
#include "mfrac/fraction.hpp"

namespace mfrac {

namespace detail {

inline const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<unsigned> out;
    for (unsigned n = 2; n < 1000; ++n) {
      bool prime = true;
      for (unsigned p : out) {
        if (p * p > n) break;
        if (n % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(n);
    }
    return out;
  }();
  return primes;
}

/// Sign of x + y*sqrt(p) for p >= 0.
inline int sign_linear(const BigInt& x, const BigInt& y, const BigInt& p) {
  const int sx = x.sign();
  const int sy = p == 0 ? 0 : y.sign();
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // Opposite signs: the larger magnitude wins.
  const int c = (x * x).compare(y * y * p);
  return c == 0 ? 0 : (c > 0 ? sx : sy);
}

/// Sign of x + y*sqrt(p) - z*sqrt(r) for p, r >= 0.
inline int sign_two_radicals(const BigInt& x, const BigInt& y, const BigInt& p,
                             const BigInt& z, const BigInt& r) {
  const int su = sign_linear(x, y, p);
  const int sv = r == 0 ? 0 : z.sign();
  if (sv == 0) return su;
  if (su != sv) return su == 0 ? -sv : su;
  // u and v share sign s: sign(u - v) = s * sign(u^2 - v^2).
  const int sq = sign_linear(x * x + y * y * p - z * z * r, 2 * x * y, p);
  return su * sq;
}

}  // namespace detail

/// (a + b*sqrt(D)) / c with c > 0 and gcd(a, b, c) = 1. D is square-free
/// with respect to primes below 1000 and never a perfect square; rational
/// values are stored with b = D = 0.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;

  QuadraticSurd(BigInt a, BigInt b, BigInt c, BigInt radicand)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(radicand)) {
    canonicalize();
  }

  QuadraticSurd(const Fraction& f)  // NOLINT(google-explicit-constructor)
      : a_(f.num()), b_(0), c_(f.den()), d_(0) {}

  /// Parses "(a+b*sqrt(D))/c" (spaces ignored) or a plain fraction.
  static QuadraticSurd parse(std::string_view token);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  Fraction rational_value() const {
    if (!is_rational()) throw std::domain_error("irrational surd " + str());
    return Fraction::reduce(a_, c_);
  }

  int sign() const { return detail::sign_linear(a_, b_, d_); }

  std::string str() const {
    if (is_rational()) return Fraction::reduce(a_, c_).str();
    std::string out = "(" + a_.str();
    out += (b_ < 0 ? "-" : "+");
    out += abs(b_).str() + "*sqrt(" + d_.str() + "))/" + c_.str();
    return out;
  }

  double to_double() const {
    return (a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>())) /
           c_.convert_to<double>();
  }

  QuadraticSurd operator-() const { return QuadraticSurd(-a_, -b_, c_, d_); }

  /// Sum of surds sharing a radicand (or with one side rational). Distinct
  /// radicands are not representable and throw std::domain_error.
  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (!x.is_rational() && !y.is_rational() && x.d_ != y.d_) {
      throw std::domain_error("sum of surds with distinct radicands");
    }
    const BigInt& d = x.is_rational() ? y.d_ : x.d_;
    return QuadraticSurd(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
  }
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x + (-y);
  }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const Fraction& f) {
    return QuadraticSurd(x.a_ * f.num(), x.b_ * f.num(), x.c_ * f.den(), x.d_);
  }

  /// Exact order, decided by integer sign analysis.
  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
    const BigInt lhs_rational = y.c_ * x.a_ - x.c_ * y.a_;
    int s;
    if (x.d_ == y.d_ || x.is_rational() || y.is_rational()) {
      const BigInt& d = x.is_rational() ? y.d_ : x.d_;
      s = detail::sign_linear(lhs_rational, y.c_ * x.b_ - x.c_ * y.b_, d);
    } else {
      s = detail::sign_two_radicals(lhs_rational, y.c_ * x.b_, x.d_, x.c_ * y.b_, y.d_);
    }
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return (x <=> y) == std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s) { return os << s.str(); }

 private:
  void canonicalize() {
    if (c_ == 0) throw std::domain_error("zero surd denominator");
    if (d_ < 0) throw std::domain_error("negative radicand");
    if (c_ < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
    }
    if (b_ != 0 && d_ != 0) {
      for (unsigned p : detail::small_primes()) {
        const BigInt square = BigInt(p) * p;
        if (square > d_) break;
        while (d_ % square == 0) {
          d_ /= square;
          b_ *= p;
        }
      }
      BigInt root;
      if (is_perfect_square(d_, &root)) {
        a_ += b_ * root;
        b_ = 0;
      }
    }
    if (b_ == 0 || d_ == 0) {
      b_ = 0;
      d_ = 0;
    }
    BigInt g = gcd(gcd(a_, b_), c_);
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      c_ /= g;
    }
  }

  BigInt a_{0};
  BigInt b_{0};
  BigInt c_{1};
  BigInt d_{0};
};

inline QuadraticSurd QuadraticSurd::parse(std::string_view token) {
  std::string s;
  for (char ch : token) {
    if (ch != ' ') s.push_back(ch);
  }
  const auto fail = [&]() -> QuadraticSurd {
    throw std::invalid_argument("malformed surd '" + std::string(token) + "'");
  };
  const auto sqrt_pos = s.find("*sqrt(");
  if (sqrt_pos == std::string::npos) {
    try {
      return QuadraticSurd(Fraction::parse(s));
    } catch (const std::invalid_argument&) {
      return fail();
    }
  }
  if (s.empty() || s.front() != '(') return fail();
  // Split "(a" "+b" at the last sign before "*sqrt(".
  const auto sign_pos = s.find_last_of("+-", sqrt_pos);
  if (sign_pos == std::string::npos || sign_pos <= 1) return fail();
  const auto close = s.find(")", sqrt_pos);
  if (close == std::string::npos || s.size() < close + 3 || s[close + 1] != ')' || s[close + 2] != '/') {
    return fail();
  }
  try {
    BigInt a = parse_bigint(s.substr(1, sign_pos - 1));
    BigInt b = parse_bigint(s.substr(sign_pos, sqrt_pos - sign_pos));
    BigInt d = parse_bigint(s.substr(sqrt_pos + 6, close - sqrt_pos - 6));
    BigInt c = parse_bigint(s.substr(close + 3));
    return QuadraticSurd(std::move(a), std::move(b), std::move(c), std::move(d));
  } catch (const std::invalid_argument&) {
    return fail();
  }
}

/// Integer bounds lo <= x * 10^k <= hi with hi - lo <= 2.
///
/// sqrt(D) is bracketed by isqrt(D * 100^(k+g)) where 10^g >= |b|/c, so the
/// bracket width on x * 10^(k+g) is at most 10^g before outward rounding.
inline std::pair<BigInt, BigInt> surd_enclose_scaled(const QuadraticSurd& x, unsigned k) {
  if (x.is_rational()) {
    const BigInt num = x.a() * pow10(k);
    return {floor_div(num, x.c()), ceil_div(num, x.c())};
  }
  unsigned g = 0;
  BigInt guard = 1;
  while (guard * x.c() < abs(x.b())) {
    guard *= 10;
    ++g;
  }
  const BigInt scale = pow10(k + g);
  const BigInt r = isqrt(x.radicand() * scale * scale);
  const BigInt base = x.a() * scale;
  BigInt low = base + x.b() * r;
  BigInt high = base + x.b() * (r + 1);
  if (x.b() < 0) std::swap(low, high);
  const BigInt denom = x.c() * guard;
  return {floor_div(low, denom), ceil_div(high, denom)};
}

/// Rational bounds L <= x <= U with U - L < 10^-precision. Rational inputs
/// return the exact value twice.
inline std::pair<Fraction, Fraction> surd_enclose(const QuadraticSurd& x, unsigned precision) {
  if (precision == 0) throw std::invalid_argument("precision must be positive");
  if (x.is_rational()) {
    const Fraction v = x.rational_value();
    return {v, v};
  }
  const unsigned k = precision + 1;
  auto [lo, hi] = surd_enclose_scaled(x, k);
  const BigInt scale = pow10(k);
  return {Fraction::reduce(std::move(lo), scale), Fraction::reduce(std::move(hi), scale)};
}

}  // namespace mfrac
