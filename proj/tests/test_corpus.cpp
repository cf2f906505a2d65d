#include <doctest.h>

#include <set>

#include "extlab/corpus.hpp"
#include "extlab/extension.hpp"

using namespace extlab;

TEST_CASE("disconnected counterexample") {
  Measure fair = disconnected_counterexample(2, {Rational(1, 2), Rational(1, 2)});
  CHECK(fair.mass(Symbols{0, 0, 1}) == Rational(1, 4));
  CHECK(fair.mass(Symbols{0, 1, 1}) == 0);
  CHECK(is_locally_stationary(fair).stationary);
  CHECK(entropy_chain_refute(fair, 3).verdict == EntropyChainResult::Verdict::Refuted);

  Measure skew = disconnected_counterexample(3, {Rational(1, 6), Rational(1, 3), Rational(1, 2)});
  CHECK(is_locally_stationary(skew).stationary);
  CHECK(entropy_chain_refute(skew, 3).verdict == EntropyChainResult::Verdict::Refuted);

  Measure point = disconnected_counterexample(2, {Rational(1), Rational(0)});
  CHECK(point == Measure::point_mass(point.domain(), 2, {0, 0, 0}));
  CHECK(refute_nonextendible(point, box_schedule(point.domain(), 5)).verdict == RefutationReport::Verdict::Unknown);
  CHECK_THROWS(disconnected_counterexample(2, {Rational(1, 2), Rational(1, 3)}));
}

TEST_CASE("pseudolattice measure") {
  Measure mu = pseudolattice_measure();
  CHECK(mu.alphabet() == 16);
  CHECK(mu.total() == 1);
  CHECK(support_words(mu).size() == 18);
  for (const auto& w : support_words(mu)) CHECK(mu.mass(w) == Rational(1, 18));
  CHECK(is_locally_stationary(mu).stationary);
  // Frozen from an independent backtracking oracle.
  auto sched = box_schedule(mu.domain(), 6);
  auto r = sft_emptiness(support_of(mu), sched);
  CHECK(r.verdict == EmptinessResult::Verdict::Empty);
  CHECK(r.empty_window == sched[3]);
}

TEST_CASE("robinson tiles") {
  for (auto reading : {RobinsonReading::DistinctLetter, RobinsonReading::TypoForC}) {
    CAPTURE(static_cast<int>(reading));
    CHECK(robinson_base_tiles(reading).size() == 6);
    CHECK(robinson_oriented_tiles(reading).size() == 22);
    for (const auto& t : robinson_oriented_tiles(reading)) CHECK(t[1][1] == '0');
    WordSet r = robinson_tileset(reading);
    CHECK(r.domain == Domain::box({1, 1}, {3, 3}));
    CHECK(r.alphabet == static_cast<int>(robinson_letters(reading).size()));
  }
  // The first base tile is the only one with a stray letter.
  CHECK(robinson_base_tiles(RobinsonReading::DistinctLetter)[0][1][2] == 'd');
  CHECK(robinson_base_tiles(RobinsonReading::TypoForC)[0][1][2] == 'C');
}

TEST_CASE("robinson self-test: rule-consistent placements are admissible") {
  const auto reading = RobinsonReading::TypoForC;
  const auto tiles = robinson_oriented_tiles(reading);
  const WordSet r = robinson_tileset(reading);
  const Domain block = Domain::box({1, 1}, {6, 6});
  std::size_t valid = 0;
  for (const auto& tl : tiles)
    for (const auto& tr : tiles) {
      if (!robinson_side_by_side_ok(tl, tr)) continue;
      for (const auto& bl : tiles) {
        if (!robinson_stacked_ok(tl, bl)) continue;
        for (const auto& br : tiles)
          if (robinson_side_by_side_ok(bl, br) && robinson_stacked_ok(tr, br) && robinson_corner_ok(tl, tr, bl, br)) {
            ++valid;
            CHECK(is_admissible(r, block, robinson_render({{tl, tr}, {bl, br}}, reading)));
          }
      }
    }
  CHECK(valid > 0);
}

TEST_CASE("robinson self-test: hand-checked violations are rejected") {
  const auto reading = RobinsonReading::DistinctLetter;
  const auto base = robinson_base_tiles(reading);
  const WordSet r = robinson_tileset(reading);
  // Base tile 5 has c on both sides: two copies side by side put c against c.
  CHECK_FALSE(robinson_side_by_side_ok(base[4], base[4]));
  CHECK_FALSE(is_admissible(r, Domain::box({1, 1}, {6, 3}), robinson_render({{base[4], base[4]}}, reading)));
  // Tile 6 has b on top and B at the bottom: stacking it on itself matches.
  CHECK(robinson_stacked_ok(base[5], base[5]));
  // Four a-corners break the corner rule even when every edge matches.
  LetterTile plain = base[5];
  CHECK_FALSE(robinson_corner_ok(plain, plain, plain, plain));
  // The stray d matches nothing under the distinct reading.
  CHECK_FALSE(robinson_side_by_side_ok(base[0], base[1]));
}

TEST_CASE("binary counter") {
  CHECK(binary_counter_words(8).words.size() == 2304);
  Measure m8 = binary_counter_measure(8);
  CHECK(m8.mass(support_words(m8).front()) == Rational(1, 2304));
  CHECK(binary_counter_words(3).words.size() == 32);
  CHECK(binary_counter_words(1).words.size() == 4);
  CHECK(is_locally_stationary(binary_counter_measure(3)).stationary);
}

TEST_CASE("binary counter torus configurations") {
  // One orbit of (k+1) 2^k configurations for k = 1, 2. For k = 3 the
  // unmarked separator lets rows be read with different rotations, and an
  // independent transfer-matrix count gives 908 configurations on the 4x8
  // torus and 36 on the 4x4 torus.
  auto e1 = enumerate_periodic_configurations(binary_counter_words(1), {2, 2}, 10000);
  CHECK(e1.configurations.size() == 4);
  auto e2 = enumerate_periodic_configurations(binary_counter_words(2), {3, 4}, 10000);
  CHECK(e2.configurations.size() == 12);
  auto e3 = enumerate_periodic_configurations(binary_counter_words(3), {4, 8}, 10000);
  CHECK(e3.complete);
  CHECK(e3.configurations.size() == 908);
  CHECK(enumerate_periodic_configurations(binary_counter_words(3), {4, 4}, 10000).configurations.size() == 36);

  auto k1 = periodic_extension(binary_counter_measure(1), {2, 2});
  REQUIRE(k1.verdict == Feasibility::Feasible);
  CHECK(k1.measure->masses.size() == 4);
  for (const auto& [cfg, mass] : k1.measure->masses) CHECK(mass == Rational(1, 4));
}

TEST_CASE("ca_to_sft examples") {
  WordSet id = ca_to_sft({0, 1, 2}, Domain(1, {{0}}), 3);
  CHECK(id.domain == Domain(2, {{0, 0}, {0, 1}}));
  CHECK(id.words == std::vector<Symbols>{{0, 0}, {1, 1}, {2, 2}});

  WordSet eca = ca_to_sft(elementary_rule(110), Domain::interval(-1, 1), 2);
  CHECK(eca.words.size() == 8);

  WordSet zero = ca_to_sft(elementary_rule(0), Domain::interval(-1, 1), 2);
  auto blocks = enumerate_window_configurations(zero, Domain::box({0, 0}, {4, 1}), 1000);
  for (const auto& b : blocks.configurations)
    for (std::size_t x = 1; x <= 3; ++x) CHECK(b[2 * x + 1] == 0);

  CHECK(elementary_rule(110) == std::vector<int>{0, 1, 1, 1, 0, 1, 1, 0});
  CHECK_THROWS(ca_to_sft({0, 1}, Domain::interval(-1, 1), 2));
}
