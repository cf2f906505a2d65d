#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "extlab/lattice.hpp"
#include "extlab/rational.hpp"

namespace extlab {

// Thrown when a dense table or a search would exceed a configured limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maximum number of cells in a dense word table; EXTLAB_CAP_CELLS overrides.
std::size_t dense_cell_cap();
// alphabet^sites, or CapExceeded when above dense_cell_cap().
std::size_t checked_word_count(std::size_t sites, int alphabet);

using Symbols = std::vector<int>;

struct Word {
  Domain domain;
  int alphabet = 2;
  Symbols symbols;  // aligned with domain order

  bool operator==(const Word&) const = default;
};

Word shift_word(const Word& b, const LatticePoint& k);

// Word tables are indexed in mixed radix, first domain point most significant.
std::size_t word_index(const Symbols& s, int alphabet);
Symbols word_at(std::size_t index, std::size_t sites, int alphabet);

// For each word index on `from`, the index of its restriction to `to`.
std::vector<std::size_t> restriction_map(const Domain& from, const Domain& to, int alphabet);

class SignedMeasure {
 public:
  SignedMeasure() = default;
  SignedMeasure(Domain domain, int alphabet, std::vector<Rational> masses);
  static SignedMeasure zero(Domain domain, int alphabet);

  const Domain& domain() const { return domain_; }
  int alphabet() const { return alphabet_; }
  std::size_t word_count() const { return masses_.size(); }
  const std::vector<Rational>& masses() const { return masses_; }
  const Rational& mass(std::size_t index) const { return masses_.at(index); }
  const Rational& mass(const Symbols& s) const { return masses_.at(word_index(s, alphabet_)); }
  Symbols word(std::size_t index) const { return word_at(index, domain_.size(), alphabet_); }
  Rational total() const;

  bool operator==(const SignedMeasure&) const = default;

 protected:
  Domain domain_;
  int alphabet_ = 0;
  std::vector<Rational> masses_;
};

// A SignedMeasure whose masses are nonnegative and sum to exactly 1.
class Measure : public SignedMeasure {
 public:
  Measure() = default;
  Measure(Domain domain, int alphabet, std::vector<Rational> masses);

  static Measure point_mass(Domain domain, int alphabet, const Symbols& word);
  static Measure uniform(Domain domain, int alphabet);
  // i.i.d. with the given single-site distribution.
  static Measure product(Domain domain, const std::vector<Rational>& site_distribution);
  // Uniform over the listed (distinct) words.
  static Measure uniform_on(Domain domain, int alphabet, const std::vector<Symbols>& words);
};

SignedMeasure operator-(const SignedMeasure& a, const SignedMeasure& b);

SignedMeasure marginal(const SignedMeasure& mu, const Domain& v);
Measure marginal(const Measure& mu, const Domain& v);

struct StationarityCheck {
  bool stationary = true;
  // On failure: the sub-marginal on `subdomain` differs from the one on
  // subdomain + shift at `word` (symbols on subdomain).
  Domain subdomain;
  LatticePoint shift;
  Symbols word;
  Rational mass_here, mass_shifted;
};

StationarityCheck is_locally_stationary(const SignedMeasure& mu);

Rational tv_distance(const SignedMeasure& mu, const SignedMeasure& nu);
Measure convex_combine(const Measure& mu, const Measure& nu, const Rational& t);

double finite_window_entropy(const SignedMeasure& mu);
// H[U|V] in bits.
double conditional_entropy(const Measure& mu, const Domain& u, const Domain& v);
double entropy_metric(const Measure& mu, const Domain& u, const Domain& v);
// Exact: are the U-coordinates almost surely a function of the V-coordinates?
bool determined_by(const Measure& mu, const Domain& u, const Domain& v);

struct EntropyChainResult {
  enum class Verdict { Refuted, Unknown };
  Verdict verdict = Verdict::Unknown;
  // On Refuted: the pair at positive distance and a chain of points from
  // `from` to `to` whose consecutive steps are forced to distance zero.
  LatticePoint from, to;
  std::vector<LatticePoint> chain;
};

EntropyChainResult entropy_chain_refute(const Measure& mu, Coord horizon);

// Words of positive mass.
std::vector<Symbols> support_words(const SignedMeasure& mu);

}  // namespace extlab
