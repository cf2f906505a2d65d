#pragma once

// Random instances for property tests. Locally stationary measures come from
// shift-invariant measures on small tori (orbit averages of random periodic
// configurations) mixed with i.i.d. products, so they are extendible by
// construction.

#include <random>

#include "extlab/extension.hpp"
#include "extlab/measure.hpp"

namespace extlab::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<Rational> random_distribution(Rng& rng, int a, int max_weight = 6) {
  std::vector<Rational> p(static_cast<std::size_t>(a));
  int total = 0;
  for (auto& x : p) {
    int w = uniform_int(rng, 1, max_weight);
    x = w;
    total += w;
  }
  for (auto& x : p) x /= total;
  return p;
}

// Orbit average of a few random P-periodic configurations, restricted to d.
inline Measure random_periodic_measure(Rng& rng, const Domain& d, int a, int max_period = 4, int orbits = 3) {
  std::vector<Rational> masses(checked_word_count(d.size(), a));
  int total = 0;
  for (int o = 0; o < orbits; ++o) {
    std::vector<Coord> per(d.dim());
    for (auto& p : per) p = uniform_int(rng, 1, max_period);
    FiniteModule m{PeriodVector(per)};
    Symbols cfg(m.cardinality());
    for (auto& s : cfg) s = uniform_int(rng, 0, a - 1);
    const int w = uniform_int(rng, 1, 5);
    total += w;
    for (std::uint64_t g = 0; g < m.cardinality(); ++g) {
      LatticePoint shift = m.element_at(g);
      Symbols word;
      for (const auto& p : d) word.push_back(cfg[m.index_of(p + shift)]);
      masses[word_index(word, a)] += Rational(w) / static_cast<unsigned long>(m.cardinality());
    }
  }
  for (auto& x : masses) x /= total;
  return Measure(d, a, std::move(masses));
}

// Periodic part mixed with a full-support product, weight t on the product.
inline Measure random_stationary_measure(Rng& rng, const Domain& d, int a) {
  Measure periodic = random_periodic_measure(rng, d, a);
  if (uniform_int(rng, 0, 3) == 0) return periodic;
  Measure prod = Measure::product(d, random_distribution(rng, a));
  return convex_combine(periodic, prod, Rational(uniform_int(rng, 1, 4), 5));
}

// Arbitrary probability measure, typically not locally stationary.
inline Measure random_measure(Rng& rng, const Domain& d, int a) {
  std::vector<Rational> masses(checked_word_count(d.size(), a));
  int total = 0;
  for (auto& x : masses) {
    int w = uniform_int(rng, 0, 5);
    x = w;
    total += w;
  }
  if (total == 0) {
    masses[0] = 1;
    total = 1;
  }
  for (auto& x : masses) x /= total;
  return Measure(d, a, std::move(masses));
}

}  // namespace extlab::testing
