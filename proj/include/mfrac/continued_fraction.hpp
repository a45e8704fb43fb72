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

#include <stdexcept>
#include <string>
#include <vector>

#include "mfrac/bigint.hpp"
#include "mfrac/fraction.hpp"

namespace mfrac {

/// Finite simple continued fraction [a0; a1, ..., ak]. Canonical form has
/// a0 >= 0, ai >= 1 and, when k >= 1, ak >= 2.
struct ContinuedFraction {
  std::vector<BigInt> quotients;

  bool is_canonical() const {
    if (quotients.empty() || quotients.front() < 0) return false;
    for (std::size_t i = 1; i < quotients.size(); ++i) {
      if (quotients[i] < 1) return false;
    }
    return quotients.size() == 1 || quotients.back() >= 2;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < quotients.size(); ++i) {
      if (i == 1) out += "; ";
      if (i > 1) out += ", ";
      out += quotients[i].str();
    }
    return out + "]";
  }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Euclidean algorithm; the last quotient comes out >= 2 automatically.
inline ContinuedFraction to_continued_fraction(const Fraction& f) {
  if (f.sign() < 0) throw std::domain_error("continued fraction of negative value " + f.str());
  ContinuedFraction cf;
  BigInt p = f.num();
  BigInt q = f.den();
  while (q != 0) {
    BigInt a, r;
    boost::multiprecision::divide_qr(p, q, a, r);
    cf.quotients.push_back(std::move(a));
    p = std::move(q);
    q = std::move(r);
  }
  return cf;
}

inline Fraction from_continued_fraction(const ContinuedFraction& cf) {
  if (!cf.is_canonical()) {
    throw std::invalid_argument("non-canonical continued fraction " + cf.str());
  }
  // Evaluate from the tail: h/k = a_i + k'/h'.
  BigInt h = cf.quotients.back();
  BigInt k = 1;
  for (std::size_t i = cf.quotients.size() - 1; i-- > 0;) {
    BigInt next = cf.quotients[i] * h + k;
    k = std::move(h);
    h = std::move(next);
  }
  return Fraction::reduce(std::move(h), std::move(k));
}

}  // namespace mfrac
