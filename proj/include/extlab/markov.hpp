#pragma once

#include <cstddef>

#include "extlab/measure.hpp"

namespace extlab {

// U-step Markov extension of a locally stationary measure on an interval of
// U + 1 consecutive sites.
class MarkovExtension {
 public:
  explicit MarkovExtension(Measure base);

  const Measure& base() const { return base_; }
  std::size_t memory() const { return memory_; }
  int alphabet() const { return base_.alphabet(); }

  // Probability of a symbol string placed on any interval.
  Rational cylinder(const Symbols& s) const;

 private:
  Measure base_;
  std::size_t memory_;
  // prefix_[n] = masses of the base marginal on its first n sites.
  std::vector<std::vector<Rational>> prefix_;
};

// b must live on a contiguous 1-D interval; only its symbol string matters.
Rational markov_cylinder(const MarkovExtension& ext, const Word& b);

// The extension's marginal on [0..n-1].
Measure markov_window_measure(const MarkovExtension& ext, std::size_t n);

struct EntropyRate {
  double window_per_site;  // H(window n) / n
  double markov_rate;      // H(window U+1) - H(window U)
};

EntropyRate entropy_rate(const MarkovExtension& ext, std::size_t n);

}  // namespace extlab
