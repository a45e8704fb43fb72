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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mfrac/mfrac.hpp"

using namespace mfrac;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s (%.3f s) %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

double elapsed(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

Fraction frac(long long p, long long q) { return Fraction::reduce(p, q); }

}  // namespace

int main() {
  report(1, "first eleven fractions listed by enumerate --depth 5", [] {
    const auto start = Clock::now();
    const std::set<std::string> expected{"2/5",    "5/13",    "12/29",   "13/34",   "34/89",  "70/169",
                                         "75/194", "89/233",  "179/433", "233/610", "408/985"};
    std::set<std::string> seen;
    for (const TreeVertex& v : enumerate_tree(5)) seen.insert(v.triple.f3.str());
    std::size_t found = 0;
    for (const auto& s : expected) found += seen.count(s);
    const double t = elapsed(start);
    return Outcome{found == expected.size() && t < 1.0,
                   std::to_string(found) + "/11 found among " + std::to_string(seen.size()) + " vertices"};
  });

  report(2, "relations, markov equation, coprimality, congruence to depth 12", [] {
    const auto start = Clock::now();
    const auto vertices = enumerate_tree(12);
    std::size_t bad = 0;
    for (const TreeVertex& v : vertices) bad += check_relations(v.triple).all() ? 0 : 1;
    const double t = elapsed(start);
    return Outcome{vertices.size() == 8191 && bad == 0 && t < 30.0,
                   std::to_string(vertices.size()) + " vertices, " + std::to_string(bad) + " failures"};
  });

  report(3, "dlp identity to depth 10 and set equivalence for depth <= 10", [] {
    std::size_t pairs = 0, bad = 0;
    const TreeSeeds seeds = reduced_seeds();
    ++pairs;
    bad += identity_check(seeds.left, seeds.right) ? 0 : 1;
    for (const TreeVertex& v : enumerate_tree(10)) {
      ++pairs;
      bad += identity_check(v.triple.f1, v.triple.f2) ? 0 : 1;
    }
    bool sets = true;
    for (unsigned d = 0; d <= 10; ++d) {
      const SetEquivalenceReport r = set_equivalence(d);
      sets = sets && r.holds() && r.epsilon_values == (std::size_t{1} << d) + 1;
    }
    return Outcome{bad == 0 && sets, std::to_string(pairs) + " pairs, " + std::to_string(bad) +
                                         " identity failures, set equivalence " + (sets ? "holds" : "fails")};
  });

  report(4, "epsilon(?(x)) equals the springborn transport, denominators <= 100", [] {
    std::size_t count = 0, bad = 0;
    for (long long b = 1; b <= 100; ++b) {
      for (long long a = 0; a <= b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        const Fraction x = frac(a, b);
        const Fraction transported =
            (a == 0 || a == b) ? x : tree_descend(farey_path_to(x), unit_seeds()).f3;
        ++count;
        bad += epsilon(question_mark_farey(x)) == transported ? 0 : 1;
      }
    }
    return Outcome{bad == 0, std::to_string(count) + " rationals, " + std::to_string(bad) + " failures"};
  });

  report(5, "fibonacci and pell branches, pell pairs up to (1393, 985)", [] {
    std::size_t bad = 0;
    for (unsigned k = 1; k <= 15; ++k) {
      bad += fibonacci_branch(k) == tree_descend(constant_word(Turn::L, k - 1)).f3 ? 0 : 1;
      bad += pell_branch(k) == tree_descend(constant_word(Turn::R, k - 1)).f3 ? 0 : 1;
    }
    const std::vector<std::pair<int, int>> listed{{1, 1},     {3, 2},     {7, 5},     {17, 12},
                                                   {41, 29},   {99, 70},   {239, 169}, {577, 408},
                                                   {1393, 985}};
    std::size_t pell_bad = 0;
    for (std::size_t i = 0; i < listed.size(); ++i) {
      const auto [x, y] = listed[i];
      const auto [px, py] = pell_pair(static_cast<unsigned>(i + 1));
      const int norm = x * x - 2 * y * y;
      pell_bad += (px == x && py == y && (norm == 1 || norm == -1)) ? 0 : 1;
    }
    return Outcome{bad == 0 && pell_bad == 0, std::to_string(bad) + " branch failures, " +
                                                  std::to_string(pell_bad) + " pell failures"};
  });

  report(6, "approximation constants >= 1/3 for q <= 1000, C(0/1) = 1, C(1/2) = 1/2", [] {
    const Fraction third = frac(1, 3);
    std::size_t count = 0, bad = 0;
    Fraction smallest(1);
    for (const Fraction& f : markov_fractions_up_to(1000)) {
      const Fraction c = approx_constant(f).value;
      ++count;
      bad += c >= third ? 0 : 1;
      if (c < smallest) smallest = c;
    }
    const bool spots = approx_constant(Fraction(0)).value == Fraction(1) &&
                       approx_constant(frac(1, 2)).value == frac(1, 2);
    return Outcome{bad == 0 && spots, std::to_string(count) + " fractions, minimum " + smallest.str() +
                                          ", spot values " + (spots ? "ok" : "wrong")};
  });

  report(7, "interval endpoints for 2/5, freeness to 10^6, disjointness to depth 8", [] {
    const MarkovInterval iv = markov_interval(frac(2, 5));
    const bool endpoints = iv.lo == QuadraticSurd(-11, 1, 10, 221) && iv.hi == QuadraticSurd(19, -1, 10, 221);
    std::size_t not_free = 0;
    const BigInt bound = 1'000'000;
    const TreeSeeds seeds = reduced_seeds();
    for (const TreeVertex& v : enumerate_tree(5)) not_free += interval_freeness(v.triple.f3, bound).free ? 0 : 1;
    std::vector<MarkovInterval> intervals{markov_interval_unchecked(seeds.left),
                                          markov_interval_unchecked(seeds.right)};
    for (const TreeVertex& v : enumerate_tree(8)) intervals.push_back(markov_interval_unchecked(v.triple.f3));
    const std::size_t overlaps = overlapping_intervals(intervals).size();
    return Outcome{endpoints && not_free == 0 && overlaps == 0,
                   std::string("endpoints ") + (endpoints ? "exact" : "wrong") + ", " + std::to_string(not_free) +
                       " of 11 not free, " + std::to_string(overlaps) + " overlaps among " +
                       std::to_string(intervals.size()) + " intervals"};
  });

  report(8, "mcshane partial sums increase, stay below 1/2, depth 15 gap < 1e-6", [] {
    const auto start = Clock::now();
    constexpr unsigned kPrecision = 30;
    const Fraction half = frac(1, 2);
    bool increasing = true, below = true;
    Enclosure prev = mcshane_partial_sum(0, kPrecision);
    below = below && prev.hi < half;
    for (unsigned d = 1; d <= 15; ++d) {
      const Enclosure cur = mcshane_partial_sum(d, kPrecision);
      increasing = increasing && prev.hi < cur.lo;
      below = below && cur.hi < half;
      prev = cur;
    }
    const Fraction gap = half - prev.hi;
    const double t = elapsed(start);
    char buf[96];
    std::snprintf(buf, sizeof buf, "gap at depth 15 = %.3e", gap.to_double());
    return Outcome{increasing && below && gap < frac(1, 1'000'000) && t < 120.0, buf};
  });

  report(9, "x^2 + 1 = 0 mod 37666 and 15571/37666 is exceptional", [] {
    const auto sols = solve_congruence(37666);
    const std::vector<BigInt> expected{2337, 15571, 22095, 35329};
    const bool exceptional = is_exceptional_slope(frac(15571, 37666)).exceptional;
    std::string got;
    for (const BigInt& s : sols) got += s.str() + " ";
    return Outcome{sols == expected && exceptional, "solutions " + got + (exceptional ? "member" : "not member")};
  });

  report(10, "bundle discriminants to depth 12 and spot invariants", [] {
    std::size_t bad = 0;
    for (const TreeVertex& v : enumerate_tree(12)) {
      const BundleInvariants inv = bundle_invariants(v.triple.f3);
      bad += inv.discriminant() == 9 * inv.rank * inv.rank - 4 ? 0 : 1;
    }
    const BundleInvariants zero = bundle_invariants(Fraction(0));
    const BundleInvariants two_fifths = bundle_invariants(frac(2, 5));
    const bool spots = zero.form_a == 1 && zero.form_b == 3 && zero.form_c == 1 && two_fifths.s == 1 &&
                       two_fifths.c2 == 4 && zero.discriminant() == 5;
    return Outcome{bad == 0 && spots, std::to_string(bad) + " failures, spot values " + (spots ? "ok" : "wrong")};
  });

  report(11, "unicity scan to depth 15 reports no duplicate denominators", [] {
    const UnicityReport u = unicity_scan(15);
    return Outcome{u.duplicates.empty() && u.repeated_fractions.empty(),
                   std::to_string(u.vertices) + " fractions, " + std::to_string(u.duplicates.size()) + " duplicates"};
  });

  report(12, "generalized equations (1,1,2,4) and (1,2,3,6) to depth 10", [] {
    std::size_t count = 0, bad = 0;
    bool depth_one = true;
    const std::vector<std::pair<GeneralizedEquation, IntTriple>> cases{
        {GeneralizedEquation::quadric(), IntTriple{3, 1, 1}},
        {GeneralizedEquation::cubic_del_pezzo(), IntTriple{5, 1, 1}}};
    for (const auto& [eq, first] : cases) {
      bool seen = false;
      for (const GeneralizedTriple& t : generalized_enumerate(eq, 10).triples) {
        ++count;
        bad += satisfies(eq, t.values) ? 0 : 1;
        seen = seen || (t.depth == 1 && t.values == first);
      }
      depth_one = depth_one && seen;
    }
    return Outcome{bad == 0 && depth_one, std::to_string(count) + " triples, " + std::to_string(bad) +
                                              " failures, depth-1 triples " + (depth_one ? "present" : "missing")};
  });

  report(13, "lyapunov estimates at n = 100", [] {
    const auto start = Clock::now();
    const double ln_phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    const double alternating = lyapunov_estimate(PathRule::alternating, 100).final_estimate();
    const double constant = lyapunov_estimate(PathRule::constant, 100).final_estimate();
    const double t = elapsed(start);
    char buf[128];
    std::snprintf(buf, sizeof buf, "alternating %.5f (ln phi %.5f), constant %.5f", alternating, ln_phi, constant);
    return Outcome{std::abs(alternating - ln_phi) < 0.02 && constant < 0.05 && t < 1.0, buf};
  });

  report(14, "question mark: farey = salem, monotone, symmetric for denominators <= 50", [] {
    std::vector<Fraction> xs;
    for (long long b = 1; b <= 50; ++b) {
      for (long long a = 0; a <= b; ++a) {
        if (std::gcd(a, b) == 1) xs.push_back(frac(a, b));
      }
    }
    std::sort(xs.begin(), xs.end());
    std::size_t bad = 0;
    std::vector<DyadicRational> values;
    for (const Fraction& x : xs) {
      const DyadicRational v = question_mark_farey(x);
      bad += v == question_mark_salem(x) ? 0 : 1;
      bad += question_mark_farey(Fraction(1) - x) == DyadicRational(1) - v ? 0 : 1;
      values.push_back(v);
    }
    for (std::size_t i = 1; i < values.size(); ++i) bad += values[i - 1] < values[i] ? 0 : 1;
    return Outcome{bad == 0, std::to_string(xs.size()) + " rationals, " + std::to_string(bad) + " failures"};
  });

  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
