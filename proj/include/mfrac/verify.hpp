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

// Invariant suite behind `mfrac verify`: every structural identity of the
// library re-checked on enumerated data, with per-invariant pass counts.

#pragma once

#include <algorithm>
#include <future>
#include <numeric>
#include <string>
#include <vector>

#include "mfrac/analysis.hpp"
#include "mfrac/farey.hpp"
#include "mfrac/generalized.hpp"
#include "mfrac/markov_tree.hpp"
#include "mfrac/slopes.hpp"

namespace mfrac {

struct InvariantResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;

  bool ok() const { return passed == total; }
};

namespace detail {

inline void tally(InvariantResult& r, bool ok) {
  ++r.total;
  if (ok) ++r.passed;
}

/// Reduced rationals in [0, 1] with denominator <= max_den, ascending.
inline std::vector<Fraction> rationals_up_to(unsigned max_den) {
  std::vector<Fraction> out;
  for (unsigned b = 1; b <= max_den; ++b) {
    for (unsigned a = 0; a <= b; ++a) {
      if (std::gcd(a, b) == 1) out.push_back(Fraction::reduce(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Per-vertex checks for one contiguous slice of the vertex list.
struct VertexTallies {
  InvariantResult relations{"vertex relations + markov equation + coprimality + congruence"};
  InvariantResult ordering{"mediant strictly between parents, denominators increasing"};
  InvariantResult vieta{"vieta involution twice is identity"};
  InvariantResult identity{"dlp identity for neighbour pairs"};
  InvariantResult bundle{"bundle form discriminant = 9q^2 - 4"};
};

inline VertexTallies check_vertices(const std::vector<TreeVertex>& vertices, std::size_t begin, std::size_t end) {
  VertexTallies t;
  for (std::size_t i = begin; i < end; ++i) {
    const FractionTriple& tr = vertices[i].triple;
    tally(t.relations, check_relations(tr).all());
    tally(t.ordering, tr.f1 < tr.f3 && tr.f3 < tr.f2 && tr.f3.den() > tr.f1.den() && tr.f3.den() > tr.f2.den());
    const MarkovTriple qs = tr.denominators();
    bool twice = true;
    for (int k = 1; k <= 3; ++k) twice = twice && vieta_mutate(vieta_mutate(qs, k), k) == qs;
    tally(t.vieta, twice);
    tally(t.identity, identity_check(tr.f1, tr.f2));
    const BundleInvariants inv = bundle_invariants(tr.f3);
    const BigInt& q = inv.rank;
    tally(t.bundle, inv.s * q == inv.c1 * inv.c1 + 1 && inv.discriminant() == 9 * q * q - 4);
  }
  return t;
}

inline void merge(InvariantResult& into, const InvariantResult& from) {
  into.passed += from.passed;
  into.total += from.total;
}

}  // namespace detail

/// Runs every invariant with enumeration depth `depth` (capped per check
/// where the cost grows faster than the tree). Results are independent of
/// `threads`.
inline std::vector<InvariantResult> run_invariant_suite(unsigned depth, unsigned threads = 1) {
  std::vector<InvariantResult> results;
  const std::vector<TreeVertex> vertices = enumerate_tree(depth, reduced_seeds(), threads);

  // Per-vertex checks, sliced across threads and merged in slice order.
  {
    const std::size_t workers = std::max(1U, threads);
    const std::size_t chunk = (vertices.size() + workers - 1) / workers;
    std::vector<std::future<detail::VertexTallies>> jobs;
    for (std::size_t begin = 0; begin < vertices.size(); begin += chunk) {
      const std::size_t end = std::min(vertices.size(), begin + chunk);
      jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                detail::check_vertices, std::cref(vertices), begin, end));
    }
    detail::VertexTallies total;
    for (auto& job : jobs) {
      const detail::VertexTallies part = job.get();
      detail::merge(total.relations, part.relations);
      detail::merge(total.ordering, part.ordering);
      detail::merge(total.vieta, part.vieta);
      detail::merge(total.identity, part.identity);
      detail::merge(total.bundle, part.bundle);
    }
    results.push_back(total.relations);
    results.push_back(total.ordering);
    results.push_back(total.vieta);
    results.push_back(total.identity);
    results.push_back(total.bundle);
  }

  {
    InvariantResult r{"unicity: one numerator per denominator"};
    const UnicityReport u = unicity_scan(std::min(depth, 19U));
    detail::tally(r, u.duplicates.empty() && u.repeated_fractions.empty());
    results.push_back(r);
  }

  {
    InvariantResult r{"mu intertwines farey and springborn mediants"};
    const unsigned d = std::min(depth, 10U);
    for (const TreeVertex& v : enumerate_tree(d, unit_seeds())) {
      const FareyNode node = farey_node_at(v.word);
      detail::tally(r, mu(node.value).value ==
                           springborn_mediant(mu(node.left_parent).value, mu(node.right_parent).value));
    }
    results.push_back(r);
  }

  {
    InvariantResult r{"mu strictly increasing (den <= 50)"};
    const auto xs = detail::rationals_up_to(50);
    for (std::size_t i = 1; i < xs.size(); ++i) detail::tally(r, mu(xs[i - 1]).value < mu(xs[i]).value);
    results.push_back(r);
  }

  {
    InvariantResult r{"fibonacci and pell branches match tree descent"};
    for (unsigned k = 1; k <= std::max(depth + 1, 2U); ++k) {
      detail::tally(r, fibonacci_branch(k) == tree_descend(constant_word(Turn::L, k - 1)).f3);
      detail::tally(r, pell_branch(k) == tree_descend(constant_word(Turn::R, k - 1)).f3);
    }
    results.push_back(r);
  }

  {
    InvariantResult r{"epsilon set equals springborn [0,1] tree"};
    for (unsigned d = 0; d <= std::min(depth, 10U); ++d) detail::tally(r, set_equivalence(d).holds());
    results.push_back(r);
  }

  {
    InvariantResult farey_salem{"question mark: farey recursion = salem series (den <= 50)"};
    InvariantResult monotone{"question mark strictly increasing (den <= 50)"};
    InvariantResult symmetric{"question mark symmetric ?(1-x) = 1-?(x) (den <= 50)"};
    const auto xs = detail::rationals_up_to(50);
    std::vector<DyadicRational> values;
    for (const Fraction& x : xs) {
      const DyadicRational v = question_mark_farey(x);
      detail::tally(farey_salem, v == question_mark_salem(x));
      detail::tally(symmetric, question_mark_farey(Fraction(1) - x) == DyadicRational(1) - v);
      values.push_back(v);
    }
    for (std::size_t i = 1; i < values.size(); ++i) detail::tally(monotone, values[i - 1] < values[i]);
    results.push_back(farey_salem);
    results.push_back(monotone);
    results.push_back(symmetric);
  }

  {
    InvariantResult r{"bridge: epsilon(?(x)) = [0,1] springborn transport (den <= 100)"};
    for (const Fraction& x : detail::rationals_up_to(100)) {
      Fraction transported;
      if (x.sign() == 0 || x == Fraction(1)) {
        transported = x;
      } else {
        transported = tree_descend(farey_path_to(x), unit_seeds()).f3;
      }
      detail::tally(r, epsilon(question_mark_farey(x)) == transported);
    }
    results.push_back(r);
  }

  {
    InvariantResult r{"approximation constant >= 1/3 (q <= 1000)"};
    const Fraction third = Fraction::reduce(1, 3);
    for (const Fraction& f : markov_fractions_up_to(1000)) detail::tally(r, approx_constant(f).value >= third);
    results.push_back(r);
  }

  {
    InvariantResult r{"markov intervals pairwise disjoint"};
    std::vector<MarkovInterval> intervals;
    const TreeSeeds seeds = reduced_seeds();
    intervals.push_back(markov_interval_unchecked(seeds.left));
    intervals.push_back(markov_interval_unchecked(seeds.right));
    for (const TreeVertex& v : enumerate_tree(std::min(depth, 8U))) {
      intervals.push_back(markov_interval_unchecked(v.triple.f3));
    }
    const std::size_t n = intervals.size();
    const std::size_t overlaps = overlapping_intervals(intervals).size();
    r.total = n * (n - 1) / 2;
    r.passed = r.total - overlaps;
    results.push_back(r);
  }

  {
    InvariantResult r{"generalized equations: mutation closure satisfies equation"};
    for (const auto& eq : {GeneralizedEquation::markov(), GeneralizedEquation::quadric(),
                           GeneralizedEquation::cubic_del_pezzo()}) {
      for (const auto& t : generalized_enumerate(eq, std::min(depth, 10U)).triples) {
        detail::tally(r, satisfies(eq, t.values));
      }
    }
    results.push_back(r);
  }

  return results;
}

}  // namespace mfrac
