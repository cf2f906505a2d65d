#include <doctest.h>

#include "extlab/markov.hpp"
#include "support.hpp"

using namespace extlab;
using namespace extlab::testing;

namespace {

Measure correlated_pair() {
  return Measure(Domain::interval(0, 1), 2, {Rational(3, 8), Rational(1, 8), Rational(1, 8), Rational(3, 8)});
}

}  // namespace

TEST_CASE("markov_cylinder examples") {
  MarkovExtension ext(correlated_pair());
  CHECK(markov_cylinder(ext, Word{Domain::interval(0, 2), 2, {0, 0, 0}}) == Rational(9, 32));
  // Depends only on the string, not on where it sits.
  CHECK(markov_cylinder(ext, Word{Domain::interval(-7, -5), 2, {0, 0, 0}}) == Rational(9, 32));
  CHECK(markov_cylinder(ext, Word{Domain::interval(4, 5), 2, {1, 0}}) == Rational(1, 8));
  CHECK(markov_cylinder(ext, Word{Domain::interval(0, 0), 2, {1}}) == Rational(1, 2));
  CHECK_THROWS(markov_cylinder(ext, Word{Domain(1, {{0}, {2}}), 2, {0, 0}}));

  MarkovExtension iid(Measure::uniform(Domain::interval(0, 1), 2));
  CHECK(markov_cylinder(iid, Word{Domain::interval(0, 4), 2, {1, 0, 1, 1, 0}}) == Rational(1, 32));
}

TEST_CASE("zero-mass conditioning blocks give zero") {
  // Deterministic alternation 0101...: the block 00 never occurs.
  MarkovExtension ext(Measure(Domain::interval(0, 1), 2, {0, Rational(1, 2), Rational(1, 2), 0}));
  CHECK(ext.cylinder({0, 0, 1}) == 0);
  CHECK(ext.cylinder({0, 1, 0}) == Rational(1, 2));
}

TEST_CASE("markov_window_measure examples") {
  MarkovExtension ext(correlated_pair());
  CHECK(markov_window_measure(ext, 2) == correlated_pair());
  std::vector<Rational> want{Rational(9, 32), Rational(3, 32), Rational(1, 32), Rational(3, 32),
                             Rational(3, 32), Rational(1, 32), Rational(3, 32), Rational(9, 32)};
  CHECK(markov_window_measure(ext, 3).masses() == want);
  std::vector<Rational> rho{Rational(1, 6), Rational(1, 3), Rational(1, 2)};
  MarkovExtension iid(Measure::product(Domain::interval(0, 1), rho));
  CHECK(markov_window_measure(iid, 4) == Measure::product(Domain::interval(0, 3), rho));
}

TEST_CASE("construction rejects bad bases") {
  CHECK_THROWS(MarkovExtension(Measure::uniform(Domain(1, {{0}, {2}}), 2)));
  CHECK_THROWS(MarkovExtension(Measure(Domain::interval(0, 1), 2, {Rational(1, 2), Rational(1, 2), 0, 0})));
  CHECK_THROWS(MarkovExtension(Measure::uniform(Domain::box({0, 0}, {0, 1}), 2)));
}

TEST_CASE("entropy_rate examples") {
  CHECK(entropy_rate(MarkovExtension(Measure::uniform(Domain::interval(0, 1), 2)), 6).markov_rate == doctest::Approx(1.0));
  auto r = entropy_rate(MarkovExtension(correlated_pair()), 8);
  CHECK(r.markov_rate == doctest::Approx(0.8112781245));
  // Per-site window entropy decreases towards the rate.
  CHECK(r.window_per_site > r.markov_rate);
  CHECK(entropy_rate(MarkovExtension(Measure::point_mass(Domain::interval(0, 2), 2, {0, 0, 0})), 5).markov_rate == 0.0);
}

TEST_CASE("property: window measures are stationary, consistent, and extend the base") {
  Rng rng(301);
  for (int t = 0; t < 40; ++t) {
    const Coord u = uniform_int(rng, 0, 2);
    Measure base = random_stationary_measure(rng, Domain::interval(0, u), uniform_int(rng, 2, 3));
    MarkovExtension ext(base);
    const std::size_t n = static_cast<std::size_t>(u) + 3;
    Measure w = markov_window_measure(ext, n), w1 = markov_window_measure(ext, n + 1);
    CHECK(is_locally_stationary(w).stationary);
    CHECK(marginal(w1, Domain::interval(0, static_cast<Coord>(n) - 1)) == w);
    for (const auto& k : translates_inside(base.domain(), w.domain()))
      CHECK(marginal(w, shift_domain(base.domain(), k)).masses() == base.masses());
  }
}
