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

// The Markov fraction tree: the Farey tree with the mediant replaced by
// p1/q1 * p2/q2 = (p1 q1 + p2 q2) / (q1^2 + q2^2), seeded by 0/1 and 1/2.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <future>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mfrac/bigint.hpp"
#include "mfrac/farey.hpp"
#include "mfrac/fraction.hpp"

namespace mfrac {

/// Springborn mediant of f1 < f2, reduced. For tree neighbours the common
/// factor is exactly p2 q1 - p1 q2 and is divided out directly.
inline Fraction springborn_mediant(const Fraction& f1, const Fraction& f2) {
  if (f1 >= f2) {
    throw std::domain_error("springborn_mediant needs f1 < f2, got " + f1.str() + ", " + f2.str());
  }
  const BigInt& p1 = f1.num();
  const BigInt& q1 = f1.den();
  const BigInt& p2 = f2.num();
  const BigInt& q2 = f2.den();
  BigInt num = p1 * q1 + p2 * q2;
  BigInt den = q1 * q1 + q2 * q2;
  const BigInt divisor = p2 * q1 - p1 * q2;
  if (divisor != 1 && num % divisor == 0 && den % divisor == 0) {
    num /= divisor;
    den /= divisor;
  }
  return Fraction::reduce(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------
// Markov triples

struct MarkovTriple {
  BigInt q1, q2, q3;

  bool satisfies_equation() const { return q1 * q1 + q2 * q2 + q3 * q3 == 3 * q1 * q2 * q3; }
  bool pairwise_coprime() const { return gcd(q1, q2) == 1 && gcd(q1, q3) == 1 && gcd(q2, q3) == 1; }
  bool is_valid() const { return q1 > 0 && q2 > 0 && q3 > 0 && satisfies_equation(); }

  std::string str() const { return "(" + q1.str() + "," + q2.str() + "," + q3.str() + ")"; }

  friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
};

/// Vieta involution on entry `index` (1-based): z -> 3xy - z.
inline MarkovTriple vieta_mutate(const MarkovTriple& t, int index) {
  switch (index) {
    case 1: return {3 * t.q2 * t.q3 - t.q1, t.q2, t.q3};
    case 2: return {t.q1, 3 * t.q1 * t.q3 - t.q2, t.q3};
    case 3: return {t.q1, t.q2, 3 * t.q1 * t.q2 - t.q3};
    default: throw std::invalid_argument("vieta index must be 1, 2 or 3");
  }
}

// ---------------------------------------------------------------------------
// Tree vertices

/// Vertex f3 with its parents f1 < f3 < f2.
struct FractionTriple {
  Fraction f1, f2, f3;

  MarkovTriple denominators() const { return {f1.den(), f2.den(), f3.den()}; }
};

struct TreeSeeds {
  Fraction left;
  Fraction right;
};

/// Seeds of the reduced tree over [0, 1/2].
inline TreeSeeds reduced_seeds() { return {Fraction(0), Fraction::reduce(1, 2)}; }
/// Seeds of the tree over [0, 1] (left subtree is the reduced tree).
inline TreeSeeds unit_seeds() { return {Fraction(0), Fraction(1)}; }

inline FractionTriple tree_root(const TreeSeeds& seeds) {
  return {seeds.left, seeds.right, springborn_mediant(seeds.left, seeds.right)};
}

inline FractionTriple tree_child(const FractionTriple& t, Turn turn) {
  if (turn == Turn::L) return {t.f1, t.f3, springborn_mediant(t.f1, t.f3)};
  return {t.f3, t.f2, springborn_mediant(t.f3, t.f2)};
}

inline FractionTriple tree_descend(const TurnWord& word, const TreeSeeds& seeds = reduced_seeds()) {
  FractionTriple t = tree_root(seeds);
  for (Turn turn : word.turns) t = tree_child(t, turn);
  return t;
}

struct TreeVertex {
  TurnWord word;
  FractionTriple triple;

  std::size_t depth() const { return word.size(); }
};

/// Depth-first visit of every vertex with depth <= max_depth, L before R.
/// The visitor receives (word, triple).
template <typename Visitor>
void for_each_vertex(unsigned max_depth, const TreeSeeds& seeds, Visitor&& visit) {
  TurnWord word;
  std::function<void(const FractionTriple&)> recurse = [&](const FractionTriple& t) {
    visit(static_cast<const TurnWord&>(word), t);
    if (word.size() == max_depth) return;
    for (Turn turn : {Turn::L, Turn::R}) {
      word.turns.push_back(turn);
      recurse(tree_child(t, turn));
      word.turns.pop_back();
    }
  };
  recurse(tree_root(seeds));
}

namespace detail {

/// Levels 0..levels-1 of the subtree rooted at `root`, breadth-first.
inline std::vector<std::vector<TreeVertex>> subtree_levels(TreeVertex root, unsigned levels) {
  std::vector<std::vector<TreeVertex>> out;
  out.push_back({std::move(root)});
  for (unsigned d = 1; d < levels; ++d) {
    std::vector<TreeVertex> next;
    next.reserve(out.back().size() * 2);
    for (const TreeVertex& v : out.back()) {
      for (Turn turn : {Turn::L, Turn::R}) {
        next.push_back({v.word.child(turn), tree_child(v.triple, turn)});
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace detail

/// All 2^(depth+1) - 1 vertices to the given depth in breadth-first order,
/// L before R within a level. With threads > 1 the subtrees below a split
/// level are built concurrently and merged level by level, so the result
/// is identical for every thread count.
inline std::vector<TreeVertex> enumerate_tree(unsigned depth, const TreeSeeds& seeds = reduced_seeds(),
                                              unsigned threads = 1) {
  const TreeVertex root{TurnWord{}, tree_root(seeds)};
  unsigned split = 0;
  while ((1U << split) < threads && split < depth) ++split;
  if (threads <= 1 || split == 0) {
    std::vector<TreeVertex> out;
    for (auto& level : detail::subtree_levels(root, depth + 1)) {
      std::move(level.begin(), level.end(), std::back_inserter(out));
    }
    return out;
  }
  auto top = detail::subtree_levels(root, split + 1);
  std::vector<std::future<std::vector<std::vector<TreeVertex>>>> jobs;
  for (const TreeVertex& v : top.back()) {
    jobs.push_back(std::async(std::launch::async, detail::subtree_levels, v, depth - split + 1));
  }
  std::vector<std::vector<std::vector<TreeVertex>>> parts;
  for (auto& job : jobs) parts.push_back(job.get());

  std::vector<TreeVertex> out;
  out.reserve((std::size_t{2} << depth) - 1);
  for (unsigned d = 0; d < split; ++d) {
    std::move(top[d].begin(), top[d].end(), std::back_inserter(out));
  }
  for (unsigned d = 0; d <= depth - split; ++d) {
    for (auto& part : parts) std::move(part[d].begin(), part[d].end(), std::back_inserter(out));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Markov fractions and the Frobenius parametrization

struct MarkovFraction {
  Fraction value;
  TurnWord word;          // address in the reduced tree (meaningless for seeds)
  bool is_seed = false;   // 0/1 or 1/2

  std::size_t depth() const { return word.size(); }
};

/// mu(0) = 0/1, mu(1) = 1/2, otherwise the Farey word of x transported to
/// the reduced Markov tree.
inline MarkovFraction mu(const Fraction& x) {
  if (x.sign() < 0 || x > Fraction(1)) throw std::domain_error("mu needs x in [0, 1], got " + x.str());
  if (x.sign() == 0) return {Fraction(0), TurnWord{}, true};
  if (x == Fraction(1)) return {Fraction::reduce(1, 2), TurnWord{}, true};
  TurnWord word = farey_path_to(x);
  Fraction value = tree_descend(word).f3;
  return {std::move(value), std::move(word), false};
}

// ---------------------------------------------------------------------------
// Vertex relations

struct RelationReport {
  bool rel12_first = false;   // p2 q3 - p3 q2 = q1
  bool rel12_second = false;  // p3 q1 - p1 q3 = q2
  bool rel3 = false;          // p2 q1 - p1 q2 = (q1^2 + q2^2)/q3 = 3 q1 q2 - q3
  bool rel1_prime = false;    // right child = ((p2 q2 + p3 q3)/q1, (q2^2 + q3^2)/q1)
  bool rel2_prime = false;    // left child  = ((p1 q1 + p3 q3)/q2, (q1^2 + q3^2)/q2)
  bool markov_equation = false;
  bool pairwise_coprime = false;
  bool congruence = false;    // p3^2 + 1 = 0 mod q3

  bool all() const {
    return rel12_first && rel12_second && rel3 && rel1_prime && rel2_prime && markov_equation &&
           pairwise_coprime && congruence;
  }
};

namespace detail {

/// num/den == child exactly, with den | num and den | denominator expression.
inline bool child_matches(const Fraction& child, const BigInt& num, const BigInt& den,
                          const BigInt& divisor) {
  if (divisor == 0 || num % divisor != 0 || den % divisor != 0) return false;
  return child.num() == num / divisor && child.den() == den / divisor;
}

}  // namespace detail

inline RelationReport check_relations(const FractionTriple& t) {
  const BigInt &p1 = t.f1.num(), &q1 = t.f1.den();
  const BigInt &p2 = t.f2.num(), &q2 = t.f2.den();
  const BigInt &p3 = t.f3.num(), &q3 = t.f3.den();
  RelationReport r;
  r.rel12_first = p2 * q3 - p3 * q2 == q1;
  r.rel12_second = p3 * q1 - p1 * q3 == q2;
  const BigInt cross = p2 * q1 - p1 * q2;
  const BigInt sum_sq = q1 * q1 + q2 * q2;
  r.rel3 = sum_sq % q3 == 0 && cross == sum_sq / q3 && cross == 3 * q1 * q2 - q3;
  if (t.f3 < t.f2) {
    r.rel1_prime =
        detail::child_matches(springborn_mediant(t.f3, t.f2), p2 * q2 + p3 * q3, q2 * q2 + q3 * q3, q1);
  }
  if (t.f1 < t.f3) {
    r.rel2_prime =
        detail::child_matches(springborn_mediant(t.f1, t.f3), p1 * q1 + p3 * q3, q1 * q1 + q3 * q3, q2);
  }
  const MarkovTriple qs = t.denominators();
  r.markov_equation = qs.satisfies_equation();
  r.pairwise_coprime = qs.pairwise_coprime();
  r.congruence = (p3 * p3 + 1) % q3 == 0;
  return r;
}

// ---------------------------------------------------------------------------
// Named branches

/// k-th fraction on the all-L branch: F(2k+1)/F(2k+3) with F(1) = F(2) = 1.
inline Fraction fibonacci_branch(unsigned k) {
  if (k == 0) throw std::invalid_argument("fibonacci_branch needs k >= 1");
  BigInt a = 1, b = 1;  // F(1), F(2)
  for (unsigned i = 2; i < 2 * k + 1; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  // b = F(2k+1); F(2k+3) = F(2k+2) + F(2k+1) = (a + b) + b.
  return Fraction::reduce(b, a + 2 * b);
}

/// Pell pair (x_n, y_n) with x^2 - 2y^2 = (-1)^n, x1 = 1, x2 = 3, y1 = 1, y2 = 2.
inline std::pair<BigInt, BigInt> pell_pair(unsigned n) {
  if (n == 0) throw std::invalid_argument("pell_pair needs n >= 1");
  BigInt x_prev = 1, x = 1;  // x_0 = 1 keeps the recurrence: x_2 = 2*1 + 1
  BigInt y_prev = 0, y = 1;  // y_0 = 0: y_2 = 2*1 + 0
  for (unsigned i = 1; i < n; ++i) {
    BigInt xn = 2 * x + x_prev;
    BigInt yn = 2 * y + y_prev;
    x_prev = std::move(x);
    x = std::move(xn);
    y_prev = std::move(y);
    y = std::move(yn);
  }
  return {x, y};
}

/// k-th fraction on the all-R branch: y(2k)/y(2k+1).
inline Fraction pell_branch(unsigned k) {
  if (k == 0) throw std::invalid_argument("pell_branch needs k >= 1");
  return Fraction::reduce(pell_pair(2 * k).second, pell_pair(2 * k + 1).second);
}

inline TurnWord constant_word(Turn t, std::size_t length) {
  return TurnWord(std::vector<Turn>(length, t));
}

// ---------------------------------------------------------------------------
// Unicity scan

struct UnicityReport {
  std::size_t vertices = 0;
  std::size_t distinct_denominators = 0;
  /// Denominators carrying two or more distinct numerators.
  std::vector<std::pair<BigInt, std::vector<BigInt>>> duplicates;
  /// Fractions reached by more than one word.
  std::vector<Fraction> repeated_fractions;
};

/// Groups the seeds and all vertices to `depth` by denominator.
inline UnicityReport unicity_scan(unsigned depth) {
  if (depth > 19) throw std::invalid_argument("unicity_scan depth must be <= 19");
  std::map<BigInt, std::vector<BigInt>> by_denominator;
  const TreeSeeds seeds = reduced_seeds();
  by_denominator[seeds.left.den()].push_back(seeds.left.num());
  by_denominator[seeds.right.den()].push_back(seeds.right.num());
  UnicityReport report;
  report.vertices = 2;
  for_each_vertex(depth, seeds, [&](const TurnWord&, const FractionTriple& t) {
    by_denominator[t.f3.den()].push_back(t.f3.num());
    ++report.vertices;
  });
  report.distinct_denominators = by_denominator.size();
  for (auto& [q, numerators] : by_denominator) {
    if (numerators.size() < 2) continue;
    std::sort(numerators.begin(), numerators.end());
    for (std::size_t i = 1; i < numerators.size(); ++i) {
      if (numerators[i] == numerators[i - 1]) report.repeated_fractions.push_back(Fraction::reduce(numerators[i], q));
    }
    numerators.erase(std::unique(numerators.begin(), numerators.end()), numerators.end());
    if (numerators.size() > 1) report.duplicates.emplace_back(q, numerators);
  }
  return report;
}

}  // namespace mfrac
