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

// Exceptional slopes on the projective plane: the Drezet-Le Potier function
// on dyadic rationals, its agreement with the Springborn tree, and the
// rank / Chern class / Markov form data attached to a slope.

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mfrac/dyadic.hpp"
#include "mfrac/farey.hpp"
#include "mfrac/fraction.hpp"
#include "mfrac/markov_tree.hpp"

namespace mfrac {

/// 1/2 (f1 + f2 + (q1^-2 - q2^-2) / (f1 - f2 + 3)).
inline Fraction dlp_midpoint(const Fraction& f1, const Fraction& f2) {
  const Fraction denom = f1 - f2 + Fraction(3);
  if (denom.sign() == 0) throw std::domain_error("dlp_midpoint: f1 - f2 + 3 = 0");
  const Fraction inv_sq1 = Fraction::reduce(1, f1.den() * f1.den());
  const Fraction inv_sq2 = Fraction::reduce(1, f2.den() * f2.den());
  return (f1 + f2 + (inv_sq1 - inv_sq2) / denom) * Fraction::reduce(1, 2);
}

/// Thread-safe cache of epsilon on [0, 1] keyed by dyadic value. Lookups
/// never change the values returned.
class EpsilonMemo {
 public:
  std::optional<Fraction> find(const DyadicRational& x) const {
    std::shared_lock lock(mutex_);
    const auto it = values_.find(key(x));
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  void store(const DyadicRational& x, const Fraction& value) {
    std::unique_lock lock(mutex_);
    values_.emplace(key(x), value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
  }

 private:
  static std::pair<unsigned, BigInt> key(const DyadicRational& x) { return {x.exponent(), x.numerator()}; }

  mutable std::shared_mutex mutex_;
  std::map<std::pair<unsigned, BigInt>, Fraction> values_;
};

/// epsilon on the dyadic line. On [0, 1] the value at (2m+1)/2^(n+1) comes
/// from the values at m/2^n and (m+1)/2^n; elsewhere epsilon(x + n) =
/// epsilon(x) + n reduces to [0, 1), with epsilon(n) = n.
inline Fraction epsilon(const DyadicRational& x, EpsilonMemo* memo = nullptr) {
  const BigInt whole = floor_div(x.numerator(), pow2(x.exponent()));
  const DyadicRational frac = x - DyadicRational(whole, 0);
  if (frac == DyadicRational(0)) return Fraction(whole);

  if (memo != nullptr) {
    if (auto hit = memo->find(frac)) return *hit + Fraction(whole);
  }
  // Descend the dyadic mean tree from the parents 0 and 1.
  DyadicRational lo(0), hi(1);
  Fraction lo_value(0), hi_value(1);
  while (true) {
    const DyadicRational mid = mean(lo, hi);
    Fraction mid_value;
    std::optional<Fraction> cached = memo != nullptr ? memo->find(mid) : std::nullopt;
    if (cached) {
      mid_value = std::move(*cached);
    } else {
      mid_value = dlp_midpoint(lo_value, hi_value);
      if (memo != nullptr) memo->store(mid, mid_value);
    }
    if (mid == frac) return mid_value + Fraction(whole);
    if (frac < mid) {
      hi = mid;
      hi_value = std::move(mid_value);
    } else {
      lo = mid;
      lo_value = std::move(mid_value);
    }
  }
}

/// Both sides of the identity linking the dyadic recursion to the
/// Springborn mediant, for neighbours f1 < f2.
inline bool identity_check(const Fraction& f1, const Fraction& f2) {
  if (f1 >= f2) throw std::domain_error("identity_check needs f1 < f2");
  const Fraction lhs = dlp_midpoint(f1, f2);
  const Fraction rhs = Fraction::reduce(f1.num() * f1.den() + f2.num() * f2.den(),
                                        f1.den() * f1.den() + f2.den() * f2.den());
  return lhs == rhs;
}

struct SetEquivalenceReport {
  std::size_t epsilon_values = 0;
  std::size_t tree_values = 0;
  bool sets_equal = false;
  bool vertexwise = false;  // epsilon(dyadic word w) == tree vertex at word w
  std::vector<std::string> mismatches;

  bool holds() const { return sets_equal && vertexwise; }
};

/// Compares {epsilon(m/2^n) : n <= depth, 0 <= m <= 2^n} with the [0, 1]
/// Springborn tree (seeds 0/1, 1/1, vertices of depth < depth).
inline SetEquivalenceReport set_equivalence(unsigned depth) {
  if (depth > 16) throw std::invalid_argument("set_equivalence depth must be <= 16");
  SetEquivalenceReport report;
  std::set<Fraction> eps_values;
  // Level-by-level dyadic recursion with the values of the previous level.
  std::vector<Fraction> level{Fraction(0), Fraction(1)};
  eps_values.insert(level.begin(), level.end());
  for (unsigned n = 1; n <= depth; ++n) {
    std::vector<Fraction> next;
    next.reserve(level.size() * 2 - 1);
    for (std::size_t i = 0; i + 1 < level.size(); ++i) {
      next.push_back(level[i]);
      next.push_back(dlp_midpoint(level[i], level[i + 1]));
    }
    next.push_back(level.back());
    level = std::move(next);
    eps_values.insert(level.begin(), level.end());
  }

  std::set<Fraction> tree_values{Fraction(0), Fraction(1)};
  report.vertexwise = true;
  if (depth >= 1) {
    for (const TreeVertex& v : enumerate_tree(depth - 1, unit_seeds())) {
      tree_values.insert(v.triple.f3);
      // Word w in the dyadic mean tree: binary digits of w then a final 1.
      const DyadicRational dyadic = question_mark_of_word(v.word);
      const BigInt index = dyadic.numerator() << (depth - dyadic.exponent());
      const Fraction& eps = level[index.convert_to<std::size_t>()];
      if (eps != v.triple.f3) {
        report.vertexwise = false;
        report.mismatches.push_back(v.word.str() + ": " + eps.str() + " vs " + v.triple.f3.str());
      }
    }
  }
  report.epsilon_values = eps_values.size();
  report.tree_values = tree_values.size();
  report.sets_equal = eps_values == tree_values;
  return report;
}

// ---------------------------------------------------------------------------
// Normalization and membership

/// x = n + sign * reduced with reduced in [0, 1/2].
struct SlopeNormalization {
  BigInt n;
  int sign = 1;
  Fraction reduced;

  Fraction value() const { return Fraction(n) + (sign > 0 ? reduced : -reduced); }
  std::string str() const { return n.str() + (sign > 0 ? " + " : " - ") + reduced.str(); }
};

inline SlopeNormalization normalize_slope(const Fraction& x) {
  const BigInt whole = x.floor();
  const Fraction frac = x - Fraction(whole);
  const Fraction half = Fraction::reduce(1, 2);
  if (frac <= half) return {whole, 1, frac};
  return {whole + 1, -1, Fraction(1) - frac};
}

struct MembershipResult {
  bool exceptional = false;
  SlopeNormalization normalization;
  /// Tree address of the reduced slope; nullopt for the seeds 0/1, 1/2 and
  /// for rejected slopes.
  std::optional<TurnWord> witness;
  std::size_t steps = 0;
};

/// Descends the reduced Markov tree toward the normalized slope. Every
/// descendant of a vertex has a larger denominator than the vertex, so the
/// search rejects once the current denominator exceeds the target's.
inline MembershipResult is_exceptional_slope(const Fraction& x) {
  MembershipResult result;
  result.normalization = normalize_slope(x);
  const Fraction& target = result.normalization.reduced;
  const TreeSeeds seeds = reduced_seeds();
  if (target == seeds.left || target == seeds.right) {
    result.exceptional = true;
    return result;
  }
  FractionTriple t = tree_root(seeds);
  TurnWord word;
  while (true) {
    ++result.steps;
    if (t.f3 == target) {
      result.exceptional = true;
      result.witness = std::move(word);
      return result;
    }
    if (t.f3.den() > target.den()) return result;
    const Turn turn = target < t.f3 ? Turn::L : Turn::R;
    word.turns.push_back(turn);
    t = tree_child(t, turn);
  }
}

// ---------------------------------------------------------------------------
// Bundle invariants

struct BundleInvariants {
  SlopeNormalization normalization;
  BigInt rank;  // q
  BigInt c1;    // p
  BigInt s;     // (p^2 + 1) / q
  BigInt c2;    // (q - 1)(s + 1) / 2
  BigInt form_a, form_b, form_c;  // q x^2 + (3q - 2p) xy + (s - 3p) y^2

  BigInt discriminant() const { return form_b * form_b - 4 * form_a * form_c; }
  BigInt content() const { return gcd(gcd(form_a, form_b), form_c); }
};

/// Invariants of the exceptional bundle with the given slope, computed on
/// the normalized representative p/q in [0, 1/2]. Non-exceptional slopes
/// throw std::domain_error.
inline BundleInvariants bundle_invariants(const Fraction& x) {
  const MembershipResult m = is_exceptional_slope(x);
  if (!m.exceptional) throw std::domain_error("not an exceptional slope: " + x.str());
  const BigInt& p = m.normalization.reduced.num();
  const BigInt& q = m.normalization.reduced.den();
  BundleInvariants inv;
  inv.normalization = m.normalization;
  inv.rank = q;
  inv.c1 = p;
  inv.s = (p * p + 1) / q;
  inv.c2 = (q - 1) * (inv.s + 1) / 2;
  inv.form_a = q;
  inv.form_b = 3 * q - 2 * p;
  inv.form_c = inv.s - 3 * p;
  return inv;
}

}  // namespace mfrac
