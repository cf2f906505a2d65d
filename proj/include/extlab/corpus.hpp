#pragma once

#include <array>
#include <string>
#include <vector>

#include "extlab/measure.hpp"
#include "extlab/sft.hpp"

namespace extlab {

// On {0,1,3}: mass(a,b,c) = rho(a) rho(c) when a == b, else 0.
Measure disconnected_counterexample(int alphabet, const std::vector<Rational>& rho);

// Eighteen 2x2 tiles over 16 symbols on [0..1]^2, each with mass 1/18.
Measure pseudolattice_measure();

// 3x3 letter tiles, rows listed top to bottom.
using LetterTile = std::array<std::array<char, 3>, 3>;

enum class RobinsonReading {
  DistinctLetter,  // the stray 'd' is an eighth letter matching nothing
  TypoForC,        // the stray 'd' is read as 'C'
};

// Letters in alphabet order: 0 a A b B c C, plus d for DistinctLetter.
std::string robinson_letters(RobinsonReading reading);
std::vector<LetterTile> robinson_base_tiles(RobinsonReading reading);
// Base tiles and their quarter turns, without repeats.
std::vector<LetterTile> robinson_oriented_tiles(RobinsonReading reading);

bool robinson_side_by_side_ok(const LetterTile& left, const LetterTile& right);
bool robinson_stacked_ok(const LetterTile& top, const LetterTile& bottom);
bool robinson_corner_ok(const LetterTile& tl, const LetterTile& tr, const LetterTile& bl, const LetterTile& br);

// Letters of a block of tiles (rows top to bottom) as a configuration on
// [1..3c] x [1..3r], y increasing upwards.
Symbols robinson_render(const std::vector<std::vector<LetterTile>>& tiles, RobinsonReading reading);

// Admissible 3x3 letter windows on [1..3]^2: every window that occurs in a
// 2x2 block of tiles obeying the edge and corner rules.
WordSet robinson_tileset(RobinsonReading reading);

// Vertical pairs of successive k-bit counter rows followed by a zero
// separator column, with all horizontal cyclic rotations; on [1..k+1]x{0,1}.
WordSet binary_counter_words(int k);
Measure binary_counter_measure(int k);

// Lifted neighbourhood U x {0} plus (0,...,0,1) and the words whose top
// symbol is rule(bottom symbols). `rule` is indexed like words on U.
WordSet ca_to_sft(const std::vector<int>& rule, const Domain& u, int alphabet);

// Rule table of an elementary automaton on U = {-1,0,1}.
std::vector<int> elementary_rule(int number);

}  // namespace extlab
