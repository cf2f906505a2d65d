#include "extlab/markov.hpp"

namespace extlab {

MarkovExtension::MarkovExtension(Measure base) : base_(std::move(base)) {
  if (!base_.domain().is_interval())
    throw std::invalid_argument("Markov extension needs a base on a 1-D interval, got " + to_string(base_.domain()));
  auto check = is_locally_stationary(base_);
  if (!check.stationary)
    throw std::invalid_argument("Markov extension needs a locally stationary base; fails on " +
                                to_string(check.subdomain) + " shifted by " + to_string(check.shift));
  memory_ = base_.domain().size() - 1;
  const Coord lo = base_.domain()[0][0];
  prefix_.resize(memory_ + 2);
  for (std::size_t n = 0; n <= memory_ + 1; ++n) {
    Domain first = n == 0 ? Domain(1, {}) : Domain::interval(lo, lo + static_cast<Coord>(n) - 1);
    prefix_[n] = marginal(base_, first).masses();
  }
}

Rational MarkovExtension::cylinder(const Symbols& s) const {
  const int a = alphabet();
  const std::size_t len = s.size();
  if (len <= memory_ + 1) return prefix_[len][word_index(s, a)];
  const auto& full = prefix_[memory_ + 1];
  const auto& cond = prefix_[memory_];
  Rational p = full[word_index(Symbols(s.begin(), s.begin() + static_cast<long>(memory_ + 1)), a)];
  for (std::size_t k = 1; k + memory_ < len && sgn(p) != 0; ++k) {
    auto first = s.begin() + static_cast<long>(k);
    const Rational& denom = cond[word_index(Symbols(first, first + static_cast<long>(memory_)), a)];
    if (sgn(denom) == 0) return 0;
    p *= full[word_index(Symbols(first, first + static_cast<long>(memory_ + 1)), a)] / denom;
  }
  return p;
}

Rational markov_cylinder(const MarkovExtension& ext, const Word& b) {
  if (b.symbols.size() != b.domain.size()) throw std::invalid_argument("markov_cylinder: malformed word");
  if (!b.domain.empty() && !b.domain.is_interval())
    throw std::invalid_argument("markov_cylinder: word must live on a contiguous interval");
  if (b.alphabet != ext.alphabet()) throw std::invalid_argument("markov_cylinder: alphabet mismatch");
  return ext.cylinder(b.symbols);
}

Measure markov_window_measure(const MarkovExtension& ext, std::size_t n) {
  if (n == 0) throw std::invalid_argument("markov_window_measure: window length must be positive");
  const int a = ext.alphabet();
  const std::size_t u = ext.memory();
  const Domain window = Domain::interval(0, static_cast<Coord>(n) - 1);
  checked_word_count(n, a);
  if (n <= u + 1)
    return Measure(window, a,
                   marginal(ext.base(), shift_domain(window, ext.base().domain()[0])).masses());

  // Grow one site at a time: mass(s x) = mass(s) * base(last U of s, x) / cond(last U of s).
  std::vector<Rational> cur = ext.base().masses();
  std::vector<Rational> cond(checked_word_count(u, a));
  for (std::size_t i = 0; i < cur.size(); ++i) cond[i / static_cast<std::size_t>(a)] += cur[i];
  const std::size_t tail = cond.size();  // a^U
  for (std::size_t len = u + 1; len < n; ++len) {
    std::vector<Rational> next(cur.size() * static_cast<std::size_t>(a));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (sgn(cur[i]) == 0) continue;
      const std::size_t last = i % tail;
      for (int x = 0; x < a; ++x) {
        const std::size_t grown = last * static_cast<std::size_t>(a) + static_cast<std::size_t>(x);
        const Rational& num = ext.base().mass(grown);
        if (sgn(num) == 0) continue;
        next[i * static_cast<std::size_t>(a) + static_cast<std::size_t>(x)] = cur[i] * num / cond[last];
      }
    }
    cur = std::move(next);
  }
  return Measure(window, a, std::move(cur));
}

EntropyRate entropy_rate(const MarkovExtension& ext, std::size_t n) {
  if (n < ext.memory() + 1) throw std::invalid_argument("entropy_rate: window shorter than the base");
  const std::size_t u = ext.memory();
  double h_full = finite_window_entropy(ext.base());
  double h_tail = 0;
  if (u > 0) h_tail = finite_window_entropy(markov_window_measure(ext, u));
  return {finite_window_entropy(markov_window_measure(ext, n)) / static_cast<double>(n), h_full - h_tail};
}

}  // namespace extlab
