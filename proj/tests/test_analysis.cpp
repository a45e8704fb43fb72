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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <vector>

#include "mfrac/analysis.hpp"

using namespace mfrac;

namespace {

Fraction frac(long long p, long long q) { return Fraction::reduce(p, q); }

// min over a/b != p/q, b <= max_b, of b^2 |p/q - a/b|; scans every a near b p/q.
Fraction approx_constant_brute(const Fraction& f, long long max_b) {
  const long long p = f.num().convert_to<long long>();
  const long long q = f.den().convert_to<long long>();
  Fraction best(1'000'000);
  for (long long b = 1; b <= max_b; ++b) {
    const long long center = p * b / q;
    for (long long a = center - 3; a <= center + 3; ++a) {
      if (a * q == p * b) continue;
      const Fraction v = Fraction(b * b) * (f - frac(a, b)).abs();
      if (v < best) best = v;
    }
  }
  return best;
}

long double log_big(const BigInt& q) {
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(q)) + 1;
  const unsigned shift = bits > 60 ? bits - 60 : 0;
  return std::log(static_cast<long double>((q >> shift).convert_to<unsigned long long>())) +
         static_cast<long double>(shift) * std::log(2.0L);
}

}  // namespace

TEST_CASE("approximation constant spot values", "[approx]") {
  CHECK(approx_constant(Fraction(0)).value == Fraction(1));
  CHECK(approx_constant(frac(1, 2)).value == frac(1, 2));
  CHECK(approx_constant(frac(2, 5)).value == frac(2, 5));
  CHECK(approx_constant(frac(2, 5)).value >= frac(1, 3));
}

TEST_CASE("approximation constant matches a brute-force scan", "[approx][oracle]") {
  for (long long q = 1; q <= 40; ++q) {
    for (long long p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Fraction f = frac(p, q);
      const ApproxConstant c = approx_constant(f);
      REQUIRE(c.value == approx_constant_brute(f, 3 * q));
      REQUIRE(Fraction(c.b * c.b) * (f - Fraction::reduce(c.a, c.b)).abs() == c.value);
    }
  }
  for (const Fraction& f : markov_fractions_up_to(700)) {
    REQUIRE(approx_constant(f).value == approx_constant_brute(f, 3 * f.den().convert_to<long long>()));
  }
}

TEST_CASE("markov lengths", "[interval]") {
  CHECK(markov_length(1) == QuadraticSurd(3, -1, 1, 5));
  CHECK(markov_length(2) == QuadraticSurd(3, -2, 1, 2));
  QuadraticSurd prev = markov_length(1);
  for (const Fraction& f : markov_fractions_up_to(100'000)) {
    if (f.den() == 1) continue;
    const QuadraticSurd l = markov_length(f.den());
    CHECK(l.sign() > 0);
    CHECK(l < QuadraticSurd(Fraction(3)));
  }
  for (long long q = 2; q < 200; ++q) {
    const QuadraticSurd l = markov_length(q);
    CHECK(l < prev);
    prev = l;
  }
}

TEST_CASE("markov intervals", "[interval]") {
  const MarkovInterval iv = markov_interval(frac(2, 5));
  CHECK(iv.lo == QuadraticSurd::parse("(-11+1*sqrt(221))/10"));
  CHECK(iv.hi == QuadraticSurd::parse("(19-1*sqrt(221))/10"));
  const MarkovInterval zero = markov_interval(Fraction(0));
  CHECK(zero.lo == QuadraticSurd(-3, 1, 2, 5));
  CHECK(zero.hi == QuadraticSurd(3, -1, 2, 5));
  const MarkovInterval half = markov_interval(frac(1, 2));
  CHECK(half.lo == QuadraticSurd(-2, 2, 2, 2));
  CHECK(half.hi == QuadraticSurd(4, -2, 2, 2));
  CHECK_THROWS_AS(markov_interval(frac(3, 7)), std::domain_error);
}

TEST_CASE("interval freeness and a widened negative control", "[interval][oracle]") {
  CHECK(interval_freeness(frac(2, 5), 1'000'000).free);
  CHECK(interval_freeness(frac(5, 13), 1'000'000).free);
  const Fraction c = frac(2, 5);
  const QuadraticSurd l = markov_length(5);
  const QuadraticSurd lo = QuadraticSurd(c) - l, hi = QuadraticSurd(c) + l;
  const auto inside = markov_fractions_inside(lo, hi, c, 1000);
  CHECK_FALSE(inside.empty());
  bool neighbour = false;
  for (const Fraction& f : inside) neighbour = neighbour || f == frac(5, 13) || f == frac(12, 29);
  CHECK(neighbour);
}

TEST_CASE("intervals to depth 6 are pairwise disjoint and ordered like their centers", "[interval][property]") {
  std::vector<Fraction> centers = markov_fractions_up_to(tree_descend(constant_word(Turn::R, 6)).f3.den());
  std::vector<MarkovInterval> ivs;
  for (const Fraction& f : centers) ivs.push_back(markov_interval_unchecked(f));
  CHECK(overlapping_intervals(ivs).empty());
  for (std::size_t i = 1; i < ivs.size(); ++i) CHECK(ivs[i - 1].hi <= ivs[i].lo);
}

TEST_CASE("mcshane enclosures", "[mcshane]") {
  const Enclosure e = mcshane_partial_sum(6, 20);
  CHECK(e.width() < Fraction::reduce(1, pow10(20)));
  // Long double oracle.
  long double s = 0.5L * (3.0L - std::sqrt(5.0L)) + 0.5L * (3.0L - std::sqrt(32.0L) / 2.0L);
  for (const TreeVertex& v : enumerate_tree(6)) {
    const long double q = v.triple.f3.den().convert_to<long double>();
    s += 3.0L - std::sqrt(9.0L * q * q - 4.0L) / q;
  }
  CHECK(std::fabs(static_cast<long double>(e.midpoint().to_double()) - s) < 1e-12L);
  // Coarser precision contains the finer enclosure.
  const Enclosure coarse = mcshane_partial_sum(6, 8);
  CHECK(coarse.lo <= e.lo);
  CHECK(e.hi <= coarse.hi);
  Fraction prev_hi(0);
  for (unsigned d = 0; d <= 10; ++d) {
    const Enclosure cur = mcshane_partial_sum(d, 25);
    CHECK(prev_hi < cur.lo);
    CHECK(cur.hi < frac(1, 2));
    prev_hi = cur.hi;
  }
  CHECK_THROWS_AS(mcshane_partial_sum(3, 0), std::invalid_argument);
}

TEST_CASE("saltus sum converges to mu", "[saltus]") {
  for (const Fraction& x : {frac(1, 3), frac(1, 2), frac(2, 3), frac(3, 7), frac(1, 1), frac(0, 1)}) {
    const Fraction target = mu(x).value;
    const Enclosure shallow = saltus_mu(x, 6, 20);
    const Enclosure deep = saltus_mu(x, 12, 20);
    const Fraction err_shallow = (shallow.midpoint() - target).abs();
    const Fraction err_deep = (deep.midpoint() - target).abs();
    CHECK(err_deep < frac(1, 1'000'000'000));
    if (err_shallow.sign() != 0) CHECK(err_deep < err_shallow);
  }
  CHECK(saltus_mu(Fraction(0), 3, 10).contains(Fraction(0)));
  CHECK_THROWS_AS(saltus_mu(frac(3, 2), 3, 10), std::domain_error);
}

TEST_CASE("truncated saltus sums are monotone along a grid", "[saltus][property]") {
  // Flat between the retained jumps, so only non-decreasing.
  Fraction prev(-1);
  std::size_t rises = 0;
  for (long long i = 0; i <= 40; ++i) {
    const Fraction m = saltus_mu(frac(i, 40), 7, 15).midpoint();
    CHECK(prev <= m);
    rises += prev < m ? 1 : 0;
    prev = m;
  }
  CHECK(rises > 30);
}

TEST_CASE("markov irrationalities", "[irrationality]") {
  for (long long b = 1; b <= 20; ++b) {
    for (long long a = 0; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const MarkovIrrationality m = markov_irrationality(frac(a, b));
      const MarkovInterval iv = markov_interval_unchecked(m.mu);
      CHECK(m.minus == iv.lo);
      CHECK(m.plus == iv.hi);
      CHECK(m.lagrange_below_three);
      // lagrange = 3 - l(q) exactly.
      CHECK(m.lagrange == QuadraticSurd(Fraction(3)) - markov_length(m.mu.den()));
    }
  }
}

TEST_CASE("lyapunov log denominators match exact descent", "[lyapunov][oracle]") {
  for (PathRule rule : {PathRule::constant, PathRule::alternating}) {
    const unsigned n = rule == PathRule::constant ? 300 : 22;
    const LyapunovTrajectory t = lyapunov_estimate(rule, n);
    REQUIRE(t.log_q.size() == n);
    const auto turn_at = path_rule(rule);
    TurnWord w;
    for (unsigned i = 0; i < n; ++i) {
      const BigInt q = tree_descend(w).f3.den();
      CHECK(std::fabs(t.log_q[i] - static_cast<double>(log_big(q))) < 1e-9 * std::max(1.0, t.log_q[i]));
      w.turns.push_back(turn_at(i));
    }
  }
}

TEST_CASE("lyapunov estimates approach the limits", "[lyapunov]") {
  const double ln_phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
  const LyapunovTrajectory alt = lyapunov_estimate(PathRule::alternating, 2000);
  CHECK(std::fabs(alt.estimates[99] - ln_phi) < 0.02);
  CHECK(std::fabs(alt.final_estimate() - ln_phi) < 0.002);
  const LyapunovTrajectory con = lyapunov_estimate(PathRule::constant, 2000);
  CHECK(con.estimates[99] < 0.05);
  CHECK(con.final_estimate() < con.estimates[99]);
  for (std::size_t i = 19; i < alt.estimates.size(); ++i) CHECK(alt.estimates[i] <= ln_phi + 0.05);
  CHECK_THROWS_AS(lyapunov_estimate(PathRule::constant, 0), std::invalid_argument);
  CHECK_THROWS_AS(lyapunov_estimate(PathRule::constant, 10'001), std::invalid_argument);
}
