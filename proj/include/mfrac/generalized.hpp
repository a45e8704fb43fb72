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

// Markov-type equations a x^2 + b y^2 + c z^2 = d x y z and their
// mutation closure from (1, 1, 1).

#pragma once

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mfrac/bigint.hpp"

namespace mfrac {

struct GeneralizedEquation {
  unsigned a, b, c, d;

  static constexpr GeneralizedEquation markov() { return {1, 1, 1, 3}; }
  static constexpr GeneralizedEquation quadric() { return {1, 1, 2, 4}; }
  static constexpr GeneralizedEquation cubic_del_pezzo() { return {1, 2, 3, 6}; }

  bool is_supported() const {
    return *this == markov() || *this == quadric() || *this == cubic_del_pezzo();
  }

  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
           std::to_string(d) + ")";
  }

  friend constexpr bool operator==(const GeneralizedEquation&, const GeneralizedEquation&) = default;
};

/// "markov", "quadric" or "x3".
inline std::optional<GeneralizedEquation> equation_by_name(std::string_view name) {
  if (name == "markov") return GeneralizedEquation::markov();
  if (name == "quadric") return GeneralizedEquation::quadric();
  if (name == "x3") return GeneralizedEquation::cubic_del_pezzo();
  return std::nullopt;
}

using IntTriple = std::array<BigInt, 3>;

inline bool satisfies(const GeneralizedEquation& eq, const IntTriple& t) {
  const auto& [x, y, z] = t;
  return eq.a * x * x + eq.b * y * y + eq.c * z * z == eq.d * x * y * z;
}

/// Flip of coordinate i: the other root of the quadratic in that variable,
/// sum of roots = d * (product of the other two) / coefficient. Returns
/// nullopt when the flip leaves the integers.
inline std::optional<IntTriple> generalized_flip(const GeneralizedEquation& eq, const IntTriple& t, int i) {
  const std::array<unsigned, 3> coeff{eq.a, eq.b, eq.c};
  const BigInt others = t[(i + 1) % 3] * t[(i + 2) % 3] * eq.d;
  if (others % coeff[i] != 0) return std::nullopt;
  IntTriple out = t;
  out[i] = others / coeff[i] - t[i];
  return out;
}

struct GeneralizedTriple {
  IntTriple values;
  unsigned depth;  // mutations from (1, 1, 1)

  std::string str() const {
    return "(" + values[0].str() + "," + values[1].str() + "," + values[2].str() + ")";
  }
};

struct GeneralizedEnumeration {
  std::vector<GeneralizedTriple> triples;  // breadth-first, first occurrence only
  std::size_t rejected_flips = 0;
};

/// Closure of (1, 1, 1) under the three flips, up to `depth` mutations.
inline GeneralizedEnumeration generalized_enumerate(const GeneralizedEquation& eq, unsigned depth) {
  if (!eq.is_supported()) {
    throw std::domain_error("unsupported equation " + eq.str());
  }
  GeneralizedEnumeration out;
  std::set<IntTriple> seen;
  const IntTriple seed{BigInt(1), BigInt(1), BigInt(1)};
  seen.insert(seed);
  out.triples.push_back({seed, 0});
  std::size_t frontier_begin = 0;
  for (unsigned d = 1; d <= depth; ++d) {
    const std::size_t frontier_end = out.triples.size();
    for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
      for (int i = 0; i < 3; ++i) {
        auto next = generalized_flip(eq, out.triples[k].values, i);
        if (!next) {
          ++out.rejected_flips;
          continue;
        }
        if ((*next)[i] <= 0) continue;
        if (seen.insert(*next).second) out.triples.push_back({std::move(*next), d});
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

}  // namespace mfrac
