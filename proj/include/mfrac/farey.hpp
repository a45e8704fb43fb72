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

// The Farey tree of rationals in [0, 1]: root 1/2 with parents 0/1 and 1/1,
// every vertex the mediant of its two parents. Vertices are addressed by
// turn words; L moves toward smaller values.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mfrac/continued_fraction.hpp"
#include "mfrac/dyadic.hpp"
#include "mfrac/fraction.hpp"

namespace mfrac {

enum class Turn : char { L = 'L', R = 'R' };

struct TurnWord {
  std::vector<Turn> turns;

  TurnWord() = default;
  explicit TurnWord(std::vector<Turn> t) : turns(std::move(t)) {}

  /// "e" is the empty word, as printed by str().
  static TurnWord parse(std::string_view text) {
    TurnWord w;
    if (text == "e") return w;
    for (char ch : text) {
      if (ch == 'L') {
        w.turns.push_back(Turn::L);
      } else if (ch == 'R') {
        w.turns.push_back(Turn::R);
      } else {
        throw std::invalid_argument("malformed turn word '" + std::string(text) + "'");
      }
    }
    return w;
  }

  std::size_t size() const { return turns.size(); }
  bool empty() const { return turns.empty(); }

  TurnWord child(Turn t) const {
    TurnWord w = *this;
    w.turns.push_back(t);
    return w;
  }

  /// Letters, or "e" for the empty word.
  std::string str() const {
    if (turns.empty()) return "e";
    std::string out;
    out.reserve(turns.size());
    for (Turn t : turns) out.push_back(static_cast<char>(t));
    return out;
  }

  friend bool operator==(const TurnWord&, const TurnWord&) = default;
  friend auto operator<=>(const TurnWord&, const TurnWord&) = default;
};

struct FareyNode {
  Fraction value;
  Fraction left_parent;
  Fraction right_parent;
};

inline FareyNode farey_root() { return {Fraction::reduce(1, 2), Fraction(0), Fraction(1)}; }

inline FareyNode farey_child(const FareyNode& node, Turn t) {
  if (t == Turn::L) return {farey_mediant(node.left_parent, node.value), node.left_parent, node.value};
  return {farey_mediant(node.value, node.right_parent), node.value, node.right_parent};
}

inline FareyNode farey_node_at(const TurnWord& word) {
  FareyNode node = farey_root();
  for (Turn t : word.turns) node = farey_child(node, t);
  return node;
}

/// Turn word of x in (0, 1), read off the continued fraction
/// [0; a1, ..., ak] as L^(a1-1) R^a2 L^a3 ... with the last run shortened
/// by one.
inline TurnWord farey_path_to(const Fraction& x) {
  if (x.sign() <= 0 || x >= Fraction(1)) {
    throw std::domain_error("farey_path_to needs 0 < x < 1, got " + x.str());
  }
  const ContinuedFraction cf = to_continued_fraction(x);
  TurnWord word;
  const std::size_t k = cf.quotients.size() - 1;
  for (std::size_t i = 1; i <= k; ++i) {
    BigInt run = cf.quotients[i];
    if (i == 1) run -= 1;
    if (i == k) run -= 1;
    const Turn t = (i % 2 == 1) ? Turn::L : Turn::R;
    for (BigInt j = 0; j < run; ++j) word.turns.push_back(t);
  }
  return word;
}

/// Minkowski ?(x) by Farey descent: the mediant gets the mean of its
/// parents' values, starting from ?(0) = 0 and ?(1) = 1.
inline DyadicRational question_mark_farey(const Fraction& x) {
  if (x.sign() < 0 || x > Fraction(1)) {
    throw std::domain_error("question mark needs x in [0, 1], got " + x.str());
  }
  if (x.sign() == 0) return DyadicRational(0);
  if (x == Fraction(1)) return DyadicRational(1);
  FareyNode node = farey_root();
  DyadicRational left(0), right(1);
  DyadicRational value = mean(left, right);
  while (node.value != x) {
    if (x < node.value) {
      right = value;
      node = farey_child(node, Turn::L);
    } else {
      left = value;
      node = farey_child(node, Turn::R);
    }
    value = mean(left, right);
  }
  return value;
}

/// Salem's alternating series 2^(1-a1) - 2^(1-a1-a2) + ... over the
/// canonical continued fraction; ?(1) = 1.
inline DyadicRational question_mark_salem(const Fraction& x) {
  if (x.sign() < 0 || x > Fraction(1)) {
    throw std::domain_error("question mark needs x in [0, 1], got " + x.str());
  }
  if (x == Fraction(1)) return DyadicRational(1);
  const ContinuedFraction cf = to_continued_fraction(x);
  DyadicRational sum(0);
  unsigned long long partial = 0;
  for (std::size_t j = 1; j < cf.quotients.size(); ++j) {
    partial += cf.quotients[j].convert_to<unsigned long long>();
    const DyadicRational term(1, static_cast<unsigned>(partial - 1));
    sum = (j % 2 == 1) ? sum + term : sum - term;
  }
  return sum;
}

/// Binary 0.d1...dk1: L -> 0, R -> 1, then a terminating 1.
inline DyadicRational question_mark_of_word(const TurnWord& word) {
  BigInt m = 0;
  for (Turn t : word.turns) m = (m << 1) + (t == Turn::R ? 1 : 0);
  m = (m << 1) + 1;
  return DyadicRational(std::move(m), static_cast<unsigned>(word.size() + 1));
}

/// Turn word of a dyadic in (0, 1) in the dyadic mean tree (root 1/2).
inline TurnWord dyadic_path_to(const DyadicRational& d) {
  if (d <= DyadicRational(0) || d >= DyadicRational(1)) {
    throw std::domain_error("dyadic_path_to needs 0 < d < 1, got " + d.str());
  }
  TurnWord word;
  const unsigned n = d.exponent();
  for (unsigned i = n - 1; i-- > 0;) {
    word.turns.push_back(bit_test(d.numerator(), i + 1) ? Turn::R : Turn::L);
  }
  return word;
}

}  // namespace mfrac
