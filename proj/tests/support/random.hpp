#pragma once

// Seeded generators shared by the property tests.

#include <random>
#include <string>
#include <vector>

#include "mitlplan/core/lasso.hpp"
#include "mitlplan/mitl/formula.hpp"

namespace mitlplan::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline AtomSet random_letter(Rng& rng, const AtomSet& alphabet) {
  std::vector<std::string> chosen;
  for (const auto& a : alphabet)
    if (coin(rng, 0.4))
      chosen.push_back(a);
  return AtomSet(std::move(chosen));
}

/// Gaps are multiples of 1/2 in [1/2, 3] so interval endpoints are hit
/// exactly now and then.
inline Rational random_gap(Rng& rng) { return Rational(uniform(rng, 1, 6), 2); }

inline LassoTimedWord random_word(Rng& rng, const AtomSet& alphabet, int max_prefix = 4,
                                  int max_cycle = 4) {
  const int prefix_len = uniform(rng, 0, max_prefix);
  const int cycle_len = uniform(rng, 1, max_cycle);
  std::vector<TimedLetter> prefix, cycle;
  Rational t(0);
  for (int i = 0; i < prefix_len; ++i) {
    prefix.push_back({random_letter(rng, alphabet), t});
    t += random_gap(rng);
  }
  const Rational cycle_start = t;
  for (int i = 0; i < cycle_len; ++i) {
    cycle.push_back({random_letter(rng, alphabet), t});
    t += random_gap(rng);
  }
  return LassoTimedWord(std::move(prefix), std::move(cycle), t - cycle_start);
}

inline TimeInterval random_bounded_interval(Rng& rng) {
  for (;;) {
    const Rational lo(uniform(rng, 0, 6), 2);
    const Rational hi = lo + Rational(uniform(rng, 1, 8), 2);
    const bool lc = coin(rng, 0.7);
    const bool hc = coin(rng, 0.7);
    return TimeInterval::make(lo, lc, hi, hc);
  }
}

inline TimeInterval random_interval(Rng& rng) {
  if (coin(rng, 0.3)) {
    const Rational lo(uniform(rng, 0, 6), 2);
    return TimeInterval::make(lo, coin(rng, 0.7), std::nullopt, false);
  }
  return random_bounded_interval(rng);
}

inline mitl::Formula random_propositional(Rng& rng, const AtomSet& atoms, int depth) {
  using mitl::Formula;
  const auto& names = atoms.atoms();
  if (depth <= 0 || coin(rng, 0.4)) {
    const int pick = uniform(rng, 0, static_cast<int>(names.size()) + 1);
    if (pick == static_cast<int>(names.size()))
      return coin(rng) ? Formula::truth() : Formula::falsity();
    if (pick > static_cast<int>(names.size()))
      return Formula::negation(Formula::atom(names[uniform(rng, 0, static_cast<int>(names.size()) - 1)]));
    return Formula::atom(names[pick]);
  }
  switch (uniform(rng, 0, 3)) {
  case 0:
    return Formula::negation(random_propositional(rng, atoms, depth - 1));
  case 1:
    return Formula::conjunction(random_propositional(rng, atoms, depth - 1),
                                random_propositional(rng, atoms, depth - 1));
  case 2:
    return Formula::disjunction(random_propositional(rng, atoms, depth - 1),
                                random_propositional(rng, atoms, depth - 1));
  default:
    return Formula::implication(random_propositional(rng, atoms, depth - 1),
                                random_propositional(rng, atoms, depth - 1));
  }
}

/// Arbitrary nesting of every operator; with `bounded` all temporal
/// intervals have a finite upper bound.
inline mitl::Formula random_formula(Rng& rng, const AtomSet& atoms, int depth, bool bounded) {
  using mitl::Formula;
  if (depth <= 0 || coin(rng, 0.25))
    return random_propositional(rng, atoms, 1);
  auto iv = [&] { return bounded ? random_bounded_interval(rng) : random_interval(rng); };
  auto sub = [&] { return random_formula(rng, atoms, depth - 1, bounded); };
  switch (uniform(rng, 0, 7)) {
  case 0:
    return Formula::negation(sub());
  case 1:
    return Formula::conjunction(sub(), sub());
  case 2:
    return Formula::disjunction(sub(), sub());
  case 3:
    return Formula::next(iv(), sub());
  case 4:
    return Formula::eventually(iv(), sub());
  case 5:
    return Formula::always(iv(), sub());
  case 6: {
    auto interval = iv();
    return Formula::until(interval, sub(), sub());
  }
  default:
    return Formula::implication(sub(), sub());
  }
}

} // namespace mitlplan::testing
