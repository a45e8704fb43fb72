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

// Diophantine data of Markov fractions: approximation constants, the
// maximal intervals free of other Markov fractions, McShane partial sums,
// the saltus form of mu, Markov irrationalities and the Lyapunov exponent
// along tree paths.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mfrac/bigint.hpp"
#include "mfrac/farey.hpp"
#include "mfrac/fraction.hpp"
#include "mfrac/markov_tree.hpp"
#include "mfrac/quadratic_surd.hpp"
#include "mfrac/slopes.hpp"

namespace mfrac {

// ---------------------------------------------------------------------------
// Approximation constant

struct ApproxConstant {
  Fraction value;
  BigInt a, b;  // first minimizer a/b
};

/// inf over a/b != p/q of b^2 |p/q - a/b| = b |p b - a q| / q.
///
/// Every b contributes at least b/q, so the scan over increasing b stops
/// once b/q exceeds the best value found.
inline ApproxConstant approx_constant(const Fraction& f) {
  const BigInt& p = f.num();
  const BigInt& q = f.den();
  std::optional<ApproxConstant> best;
  for (BigInt b = 1;; ++b) {
    if (best && Fraction::reduce(b, q) > best->value) break;
    const BigInt t = p * b;
    const BigInt nearest = floor_div(2 * t + q, 2 * q);
    for (BigInt a = nearest - 1; a <= nearest + 1; ++a) {
      const BigInt gap = abs(t - a * q);
      if (gap == 0) continue;  // a/b == p/q
      Fraction value = Fraction::reduce(b * gap, q);
      if (!best || value < best->value) best = ApproxConstant{std::move(value), a, b};
    }
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Intervals

/// l(q) = 3 - sqrt(9q^2 - 4)/q.
inline QuadraticSurd markov_length(const BigInt& q) {
  return QuadraticSurd(3 * q, -1, q, 9 * q * q - 4);
}

struct MarkovInterval {
  Fraction center;
  QuadraticSurd lo, hi;
  QuadraticSurd length;
};

/// [p/q - l(q)/2, p/q + l(q)/2] without a membership check.
inline MarkovInterval markov_interval_unchecked(const Fraction& f) {
  const BigInt& p = f.num();
  const BigInt& q = f.den();
  const BigInt d = 9 * q * q - 4;
  return {f, QuadraticSurd(2 * p - 3 * q, 1, 2 * q, d), QuadraticSurd(2 * p + 3 * q, -1, 2 * q, d),
          markov_length(q)};
}

/// Interval around a Markov fraction (any translate or reflection of the
/// reduced set). Throws std::domain_error for other inputs.
inline MarkovInterval markov_interval(const Fraction& f) {
  if (!is_exceptional_slope(f).exceptional) throw std::domain_error("not a Markov fraction: " + f.str());
  return markov_interval_unchecked(f);
}

/// Reduced-set Markov fractions (seeds included) with denominator <= bound,
/// ascending.
inline std::vector<Fraction> markov_fractions_up_to(const BigInt& bound) {
  std::vector<Fraction> out;
  const TreeSeeds seeds = reduced_seeds();
  if (bound >= 1) out.push_back(seeds.left);
  if (bound >= 2) out.push_back(seeds.right);
  std::function<void(const FractionTriple&)> recurse = [&](const FractionTriple& t) {
    if (t.f3.den() > bound) return;
    out.push_back(t.f3);
    recurse(tree_child(t, Turn::L));
    recurse(tree_child(t, Turn::R));
  };
  recurse(tree_root(seeds));
  std::sort(out.begin(), out.end());
  return out;
}

/// Markov fractions n +- r (r reduced, denominator <= bound) strictly
/// inside (lo, hi), excluding `center`.
inline std::vector<Fraction> markov_fractions_inside(const QuadraticSurd& lo, const QuadraticSurd& hi,
                                                     const Fraction& center, const BigInt& bound,
                                                     std::size_t* checked = nullptr) {
  const auto [lo_enc, unused_lo] = surd_enclose(lo, 3);
  const auto [unused_hi, hi_enc] = surd_enclose(hi, 3);
  const BigInt n_min = lo_enc.floor() - 1;
  const BigInt n_max = hi_enc.ceil() + 1;
  std::vector<Fraction> inside;
  std::size_t count = 0;
  for (const Fraction& r : markov_fractions_up_to(bound)) {
    for (BigInt n = n_min; n <= n_max; ++n) {
      for (int s : {1, -1}) {
        const Fraction c = Fraction(n) + (s > 0 ? r : -r);
        ++count;
        if (c == center) continue;
        const QuadraticSurd cs(c);
        if (lo < cs && cs < hi) inside.push_back(c);
      }
    }
  }
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  if (checked != nullptr) *checked = count;
  return inside;
}

struct FreenessReport {
  bool free = false;
  std::vector<Fraction> intruders;
  std::size_t candidates_checked = 0;
};

inline FreenessReport interval_freeness(const Fraction& f, const BigInt& bound) {
  const MarkovInterval iv = markov_interval(f);
  FreenessReport report;
  report.intruders = markov_fractions_inside(iv.lo, iv.hi, f, bound, &report.candidates_checked);
  report.free = report.intruders.empty();
  return report;
}

/// Pairs (i, j) whose interiors overlap; empty when pairwise disjoint.
inline std::vector<std::pair<std::size_t, std::size_t>> overlapping_intervals(
    const std::vector<MarkovInterval>& intervals) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    for (std::size_t j = i + 1; j < intervals.size(); ++j) {
      const MarkovInterval& x = intervals[i];
      const MarkovInterval& y = intervals[j];
      if (!(x.hi <= y.lo || y.hi <= x.lo)) out.emplace_back(i, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enclosed sums

struct Enclosure {
  Fraction lo, hi;

  bool contains(const Fraction& x) const { return lo <= x && x <= hi; }
  Fraction width() const { return hi - lo; }
  Fraction midpoint() const { return (lo + hi) * Fraction::reduce(1, 2); }
};

namespace detail {

/// Accumulates surd enclosures on the common grid 10^-k.
class GridSum {
 public:
  explicit GridSum(unsigned k) : k_(k) {}

  void add(const QuadraticSurd& x) {
    auto [lo, hi] = surd_enclose_scaled(x, k_);
    lo_ += lo;
    hi_ += hi;
    ++terms_;
  }

  Enclosure result() const {
    const BigInt scale = pow10(k_);
    return {Fraction::reduce(lo_, scale), Fraction::reduce(hi_, scale)};
  }

  std::size_t terms() const { return terms_; }

 private:
  unsigned k_;
  BigInt lo_{0}, hi_{0};
  std::size_t terms_ = 0;
};

/// Grid exponent keeping the accumulated width of `terms` enclosures below
/// 10^-precision.
inline unsigned grid_exponent(unsigned precision, std::size_t terms) {
  return precision + decimal_digits(BigInt(2 * terms)) + 1;
}

}  // namespace detail

/// Enclosure of 1/2 (l(1) + l(2)) + sum of l(q) over the reduced-tree
/// vertices to `depth`. Width < 10^-precision.
inline Enclosure mcshane_partial_sum(unsigned depth, unsigned precision) {
  if (depth > 20) throw std::invalid_argument("mcshane depth must be <= 20");
  if (precision == 0) throw std::invalid_argument("precision must be positive");
  const std::size_t terms = (std::size_t{2} << depth) + 1;
  detail::GridSum sum(detail::grid_exponent(precision, terms));
  const Fraction half = Fraction::reduce(1, 2);
  sum.add(markov_length(1) * half);
  sum.add(markov_length(2) * half);
  for_each_vertex(depth, reduced_seeds(),
                  [&](const TurnWord&, const FractionTriple& t) { sum.add(markov_length(t.f3.den())); });
  return sum.result();
}

/// Truncated saltus sum -l(1)/2 + sum l(q(a/b)) H(x - a/b) over a/b in
/// {0, 1} and the Farey vertices to `depth`, with H(0) = 1/2. Width
/// < 10^-precision.
inline Enclosure saltus_mu(const Fraction& x, unsigned depth, unsigned precision) {
  if (x.sign() < 0 || x > Fraction(1)) throw std::domain_error("saltus_mu needs x in [0, 1], got " + x.str());
  if (depth > 20) throw std::invalid_argument("saltus depth must be <= 20");
  if (precision == 0) throw std::invalid_argument("precision must be positive");
  const std::size_t terms = (std::size_t{2} << depth) + 2;
  detail::GridSum sum(detail::grid_exponent(precision, terms));
  const Fraction half = Fraction::reduce(1, 2);
  const auto add_jump = [&](const Fraction& at, const BigInt& q) {
    const auto c = x <=> at;
    if (c > 0) sum.add(markov_length(q));
    if (c == 0) sum.add(markov_length(q) * half);
  };
  sum.add(-(markov_length(1) * half));
  add_jump(Fraction(0), 1);
  add_jump(Fraction(1), 2);
  // Walk the Farey and Markov trees in lockstep.
  std::function<void(const FareyNode&, const FractionTriple&, unsigned)> recurse =
      [&](const FareyNode& farey, const FractionTriple& markov, unsigned level) {
        add_jump(farey.value, markov.f3.den());
        if (level == depth) return;
        for (Turn turn : {Turn::L, Turn::R}) recurse(farey_child(farey, turn), tree_child(markov, turn), level + 1);
      };
  recurse(farey_root(), tree_root(reduced_seeds()), 0);
  return sum.result();
}

// ---------------------------------------------------------------------------
// Markov irrationalities

struct MarkovIrrationality {
  Fraction mu;
  QuadraticSurd minus, plus;
  QuadraticSurd lagrange;  // sqrt(9q^2 - 4)/q
  bool lagrange_below_three = false;
};

/// The two limits mu(x) -+ l(q)/2 of Markov fractions approaching a
/// rational x, and their Lagrange number.
inline MarkovIrrationality markov_irrationality(const Fraction& x) {
  const MarkovFraction m = mu(x);
  const MarkovInterval iv = markov_interval_unchecked(m.value);
  const BigInt& q = m.value.den();
  MarkovIrrationality out{m.value, iv.lo, iv.hi, QuadraticSurd(0, 1, q, 9 * q * q - 4)};
  out.lagrange_below_three = out.lagrange < QuadraticSurd(Fraction(3));
  return out;
}

// ---------------------------------------------------------------------------
// Lyapunov exponent

enum class PathRule { constant, alternating };

/// Turn generator: constant = LLL..., alternating = LRLR...
inline std::function<Turn(std::size_t)> path_rule(PathRule rule) {
  if (rule == PathRule::constant) return [](std::size_t) { return Turn::L; };
  return [](std::size_t i) { return i % 2 == 0 ? Turn::L : Turn::R; };
}

struct LyapunovTrajectory {
  std::vector<double> estimates;  // estimates[i] = ln(ln q_{i+1}) / (i+1)
  std::vector<double> log_q;      // ln q_{i+1}

  double final_estimate() const { return estimates.back(); }
};

/// ln(ln q_n)/n along the path whose first vertex is 2/5 and whose turns
/// come from `turn_at`. Denominators are tracked as logarithms:
/// ln(3ab - c) = ln 3 + ln a + ln b + ln(1 - c/(3ab)).
inline LyapunovTrajectory lyapunov_estimate(const std::function<Turn(std::size_t)>& turn_at, unsigned n) {
  if (n == 0 || n > 10'000) throw std::invalid_argument("lyapunov steps must be in [1, 10000]");
  using Real = long double;
  const Real ln3 = std::log(Real{3});
  const auto next_log = [&](Real a, Real b, Real c) {
    const Real base = ln3 + a + b;
    return base + std::log1p(-std::exp(c - base));
  };
  Real left = 0, right = std::log(Real{2}), current = std::log(Real{5});
  LyapunovTrajectory out;
  out.estimates.reserve(n);
  const auto record = [&](std::size_t count) {
    if (!std::isfinite(current)) throw std::overflow_error("log-denominator overflow");
    out.log_q.push_back(static_cast<double>(current));
    out.estimates.push_back(static_cast<double>(std::log(current) / static_cast<Real>(count)));
  };
  record(1);
  for (std::size_t i = 1; i < n; ++i) {
    if (turn_at(i - 1) == Turn::L) {
      const Real child = next_log(left, current, right);
      right = current;
      current = child;
    } else {
      const Real child = next_log(current, right, left);
      left = current;
      current = child;
    }
    record(i + 1);
  }
  return out;
}

inline LyapunovTrajectory lyapunov_estimate(PathRule rule, unsigned n) {
  return lyapunov_estimate(path_rule(rule), n);
}

}  // namespace mfrac
