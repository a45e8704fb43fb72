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

// Solutions of x^2 + 1 = 0 (mod q): brute force for small q, factorization
// with Hensel lifting and CRT above.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mfrac/bigint.hpp"

namespace mfrac {

inline constexpr std::uint64_t kBruteForceCongruenceLimit = 10'000'000;

namespace detail {

inline BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline BigInt powmod(const BigInt& base, const BigInt& exponent, const BigInt& m) {
  return boost::multiprecision::powm(mod(base, m), exponent, m);
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt old_r = mod(a, m), r = m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    const BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  if (old_r != 1) throw std::domain_error("no modular inverse");
  return mod(old_s, m);
}

inline bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U, 41U}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic below 3.3e24 and a strong probable-prime
  // test above.
  for (unsigned a : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U, 41U}) {
    if (a % n == 0) continue;
    BigInt x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Pollard-Brent; n must be odd and composite.
inline BigInt pollard_brent(const BigInt& n) {
  for (BigInt c = 1;; ++c) {
    BigInt y = 2, x, g = 1, ys, q = 1;
    const auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(BigInt n, std::map<BigInt, unsigned>& factors) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++factors[n];
    return;
  }
  const BigInt d = pollard_brent(n);
  factor_into(d, factors);
  factor_into(n / d, factors);
}

/// Roots of x^2 + 1 modulo p^e.
inline std::vector<BigInt> roots_mod_prime_power(const BigInt& p, unsigned e) {
  if (p == 2) {
    if (e == 1) return {BigInt(1)};
    return {};
  }
  if (p % 4 == 3) return {};
  // A quadratic non-residue c gives c^((p-1)/4) with square -1.
  BigInt root;
  for (BigInt c = 2;; ++c) {
    if (powmod(c, (p - 1) / 2, p) == p - 1) {
      root = powmod(c, (p - 1) / 4, p);
      break;
    }
  }
  BigInt modulus = p;
  for (unsigned k = 1; k < e; ++k) {
    modulus *= p;
    // Newton step r <- r - (r^2 + 1) / (2r).
    root = mod(root - (root * root + 1) * inverse_mod(2 * root, modulus), modulus);
  }
  return {root, modulus - root};
}

}  // namespace detail

/// Prime factorization (trial division, then Pollard-Brent).
inline std::map<BigInt, unsigned> factorize(BigInt n) {
  if (n < 1) throw std::invalid_argument("factorize needs n >= 1");
  std::map<BigInt, unsigned> factors;
  for (unsigned p = 2; p < 100'000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      n /= p;
      ++factors[BigInt(p)];
    }
  }
  if (n > 1) detail::factor_into(n, factors);
  return factors;
}

/// All x in [0, q) with x^2 + 1 = 0 (mod q), ascending.
inline std::vector<BigInt> solve_congruence(const BigInt& q,
                                            std::uint64_t brute_force_limit = kBruteForceCongruenceLimit) {
  if (q < 1) throw std::domain_error("solve_congruence needs q >= 1");
  std::vector<BigInt> out;
  if (q <= brute_force_limit) {
    const auto m = q.convert_to<std::uint64_t>();
    for (std::uint64_t x = 0; x < m; ++x) {
      if ((x * x + 1) % m == 0) out.emplace_back(x);
    }
    return out;
  }
  std::vector<BigInt> residues{BigInt(0)};
  BigInt modulus = 1;
  for (const auto& [p, e] : factorize(q)) {
    const BigInt pe = boost::multiprecision::pow(p, e);
    const auto local = detail::roots_mod_prime_power(p, e);
    if (local.empty()) return {};
    std::vector<BigInt> combined;
    const BigInt inv = detail::inverse_mod(modulus, pe);
    for (const BigInt& r : residues) {
      for (const BigInt& s : local) {
        // x = r (mod modulus), x = s (mod pe).
        const BigInt t = detail::mod((s - r) * inv, pe);
        combined.push_back(r + modulus * t);
      }
    }
    modulus *= pe;
    residues = std::move(combined);
  }
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  return residues;
}

}  // namespace mfrac
