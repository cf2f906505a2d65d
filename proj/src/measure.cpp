#include "extlab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>

namespace extlab {

namespace {

void require_compatible(const SignedMeasure& a, const SignedMeasure& b, const char* what) {
  if (a.domain() != b.domain() || a.alphabet() != b.alphabet())
    throw std::invalid_argument(std::string(what) + ": measures live on different domains or alphabets");
}

// All index combinations of size r from n, lexicographic.
template <class F>
bool for_each_combination(std::size_t n, std::size_t r, F&& f) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return false;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double plogp_sum(const std::vector<Rational>& masses) {
  double h = 0;
  for (const auto& m : masses) {
    if (sgn(m) <= 0) continue;
    double p = m.get_d();
    h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

std::size_t dense_cell_cap() {
  if (const char* env = std::getenv("EXTLAB_CAP_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 20;
}

std::size_t checked_word_count(std::size_t sites, int alphabet) {
  if (alphabet < 1) throw std::invalid_argument("alphabet size must be positive");
  const std::size_t cap = dense_cell_cap();
  std::size_t n = 1;
  for (std::size_t i = 0; i < sites; ++i) {
    if (n > cap / static_cast<std::size_t>(alphabet))
      throw CapExceeded(std::to_string(alphabet) + "^" + std::to_string(sites) +
                        " words exceed the dense cap of " + std::to_string(cap) + " cells");
    n *= static_cast<std::size_t>(alphabet);
  }
  return n;
}

Word shift_word(const Word& b, const LatticePoint& k) { return Word{shift_domain(b.domain, k), b.alphabet, b.symbols}; }

std::size_t word_index(const Symbols& s, int alphabet) {
  std::size_t idx = 0;
  for (int x : s) {
    if (x < 0 || x >= alphabet) throw std::invalid_argument("symbol out of alphabet range");
    idx = idx * static_cast<std::size_t>(alphabet) + static_cast<std::size_t>(x);
  }
  return idx;
}

Symbols word_at(std::size_t index, std::size_t sites, int alphabet) {
  Symbols s(sites);
  for (std::size_t i = sites; i-- > 0;) {
    s[i] = static_cast<int>(index % static_cast<std::size_t>(alphabet));
    index /= static_cast<std::size_t>(alphabet);
  }
  return s;
}

std::vector<std::size_t> restriction_map(const Domain& from, const Domain& to, int alphabet) {
  const std::size_t n = checked_word_count(from.size(), alphabet);
  const auto pos = to.positions_in(from);
  std::vector<std::size_t> weight(from.size(), 0);
  std::size_t w = 1;
  for (std::size_t j = pos.size(); j-- > 0;) {
    weight[pos[j]] = w;
    w *= static_cast<std::size_t>(alphabet);
  }
  std::vector<std::size_t> out(n);
  Symbols s(from.size(), 0);
  std::size_t cur = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = cur;
    for (std::size_t p = from.size(); p-- > 0;) {
      if (s[p] + 1 < alphabet) {
        ++s[p];
        cur += weight[p];
        break;
      }
      cur -= weight[p] * static_cast<std::size_t>(alphabet - 1);
      s[p] = 0;
    }
  }
  return out;
}

SignedMeasure::SignedMeasure(Domain domain, int alphabet, std::vector<Rational> masses)
    : domain_(std::move(domain)), alphabet_(alphabet), masses_(std::move(masses)) {
  if (masses_.size() != checked_word_count(domain_.size(), alphabet_))
    throw std::invalid_argument("mass table has " + std::to_string(masses_.size()) + " entries, expected " +
                                std::to_string(checked_word_count(domain_.size(), alphabet_)));
  for (auto& m : masses_) m.canonicalize();
}

SignedMeasure SignedMeasure::zero(Domain domain, int alphabet) {
  std::size_t n = checked_word_count(domain.size(), alphabet);
  return SignedMeasure(std::move(domain), alphabet, std::vector<Rational>(n));
}

Rational SignedMeasure::total() const {
  Rational t = 0;
  for (const auto& m : masses_) t += m;
  return t;
}

Measure::Measure(Domain domain, int alphabet, std::vector<Rational> masses)
    : SignedMeasure(std::move(domain), alphabet, std::move(masses)) {
  for (const auto& m : masses_)
    if (sgn(m) < 0) throw std::invalid_argument("negative mass " + to_string(m));
  if (total() != 1) throw std::invalid_argument("masses sum to " + to_string(total()) + ", not 1");
}

Measure Measure::point_mass(Domain domain, int alphabet, const Symbols& word) {
  if (word.size() != domain.size()) throw std::invalid_argument("point mass: word length differs from domain");
  std::vector<Rational> m(checked_word_count(domain.size(), alphabet));
  m[word_index(word, alphabet)] = 1;
  return Measure(std::move(domain), alphabet, std::move(m));
}

Measure Measure::uniform(Domain domain, int alphabet) {
  std::size_t n = checked_word_count(domain.size(), alphabet);
  return Measure(std::move(domain), alphabet, std::vector<Rational>(n, Rational(1, n)));
}

Measure Measure::product(Domain domain, const std::vector<Rational>& rho) {
  const int a = static_cast<int>(rho.size());
  std::size_t n = checked_word_count(domain.size(), a);
  std::vector<Rational> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (int s : word_at(i, domain.size(), a)) p *= rho[static_cast<std::size_t>(s)];
    m[i] = p;
  }
  return Measure(std::move(domain), a, std::move(m));
}

Measure Measure::uniform_on(Domain domain, int alphabet, const std::vector<Symbols>& words) {
  if (words.empty()) throw std::invalid_argument("uniform_on: empty word list");
  std::vector<Rational> m(checked_word_count(domain.size(), alphabet));
  Rational each(1, words.size());
  for (const auto& w : words) {
    if (w.size() != domain.size()) throw std::invalid_argument("uniform_on: word length differs from domain");
    auto& slot = m[word_index(w, alphabet)];
    if (sgn(slot) != 0) throw std::invalid_argument("uniform_on: repeated word");
    slot = each;
  }
  return Measure(std::move(domain), alphabet, std::move(m));
}

SignedMeasure operator-(const SignedMeasure& a, const SignedMeasure& b) {
  require_compatible(a, b, "difference");
  std::vector<Rational> m(a.word_count());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = a.mass(i) - b.mass(i);
  return SignedMeasure(a.domain(), a.alphabet(), std::move(m));
}

SignedMeasure marginal(const SignedMeasure& mu, const Domain& v) {
  if (!v.is_subset_of(mu.domain())) throw std::invalid_argument("marginal: " + to_string(v) + " is not a subset of the domain");
  auto map = restriction_map(mu.domain(), v, mu.alphabet());
  std::vector<Rational> m(checked_word_count(v.size(), mu.alphabet()));
  for (std::size_t i = 0; i < map.size(); ++i)
    if (sgn(mu.mass(i)) != 0) m[map[i]] += mu.mass(i);
  return SignedMeasure(v, mu.alphabet(), std::move(m));
}

Measure marginal(const Measure& mu, const Domain& v) {
  SignedMeasure s = marginal(static_cast<const SignedMeasure&>(mu), v);
  return Measure(s.domain(), s.alphabet(), s.masses());
}

StationarityCheck is_locally_stationary(const SignedMeasure& mu) {
  const Domain& dom = mu.domain();
  StationarityCheck out;
  for (const auto& k : overlap_shifts(dom)) {
    std::vector<LatticePoint> overlap;
    for (const auto& p : dom)
      if (dom.contains(p + k)) overlap.push_back(p);
    Domain o(dom.dim(), overlap);
    SignedMeasure here = marginal(mu, o);
    SignedMeasure there = marginal(mu, shift_domain(o, k));
    if (here.masses() == there.masses()) continue;

    // Report the smallest sub-domain of the overlap that already disagrees.
    SignedMeasure there_local(o, mu.alphabet(), there.masses());
    const std::size_t max_r = o.size() <= 16 ? o.size() : 0;
    for (std::size_t r = 1; r <= max_r; ++r) {
      bool found = for_each_combination(o.size(), r, [&](const std::vector<std::size_t>& idx) {
        std::vector<LatticePoint> pts;
        for (auto i : idx) pts.push_back(o[i]);
        Domain v(dom.dim(), pts);
        auto a = marginal(here, v), b = marginal(there_local, v);
        for (std::size_t w = 0; w < a.word_count(); ++w)
          if (a.mass(w) != b.mass(w)) {
            out = {false, v, k, a.word(w), a.mass(w), b.mass(w)};
            return true;
          }
        return false;
      });
      if (found) return out;
    }
    for (std::size_t w = 0; w < here.word_count(); ++w)
      if (here.mass(w) != there.mass(w)) return {false, o, k, here.word(w), here.mass(w), there.mass(w)};
  }
  return out;
}

Rational tv_distance(const SignedMeasure& mu, const SignedMeasure& nu) {
  require_compatible(mu, nu, "tv_distance");
  Rational d = 0;
  for (std::size_t i = 0; i < mu.word_count(); ++i) d += abs(mu.mass(i) - nu.mass(i));
  return d;
}

Measure convex_combine(const Measure& mu, const Measure& nu, const Rational& t) {
  require_compatible(mu, nu, "convex_combine");
  if (sgn(t) < 0 || t > 1) throw std::invalid_argument("convex_combine: t must lie in [0,1]");
  std::vector<Rational> m(mu.word_count());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = (1 - t) * mu.mass(i) + t * nu.mass(i);
  return Measure(mu.domain(), mu.alphabet(), std::move(m));
}

double finite_window_entropy(const SignedMeasure& mu) { return plogp_sum(mu.masses()); }

double conditional_entropy(const Measure& mu, const Domain& u, const Domain& v) {
  if (!u.is_subset_of(mu.domain()) || !v.is_subset_of(mu.domain()))
    throw std::invalid_argument("conditional_entropy: site sets must lie in the domain");
  // H[U|V] = H[U u V] - H[V]
  Domain joint = u.unite(v);
  return plogp_sum(marginal(mu, joint).masses()) - plogp_sum(marginal(mu, v).masses());
}

double entropy_metric(const Measure& mu, const Domain& u, const Domain& v) {
  return conditional_entropy(mu, u, v) + conditional_entropy(mu, v, u);
}

bool determined_by(const Measure& mu, const Domain& u, const Domain& v) {
  if (!u.is_subset_of(mu.domain()) || !v.is_subset_of(mu.domain()))
    throw std::invalid_argument("determined_by: site sets must lie in the domain");
  Domain joint = u.unite(v);
  auto pj = marginal(mu, joint);
  auto to_u = restriction_map(joint, u, mu.alphabet());
  auto to_v = restriction_map(joint, v, mu.alphabet());
  std::map<std::size_t, std::size_t> seen;
  for (std::size_t i = 0; i < pj.word_count(); ++i) {
    if (sgn(pj.mass(i)) == 0) continue;
    auto [it, fresh] = seen.emplace(to_v[i], to_u[i]);
    if (!fresh && it->second != to_u[i]) return false;
  }
  return true;
}

EntropyChainResult entropy_chain_refute(const Measure& mu, Coord horizon) {
  if (!is_locally_stationary(mu).stationary)
    throw std::invalid_argument("entropy_chain_refute: measure is not locally stationary");
  if (horizon < 0) throw std::invalid_argument("entropy_chain_refute: negative horizon");
  const Domain& dom = mu.domain();
  const std::size_t dim = dom.dim();

  std::vector<LatticePoint> zero_steps;
  std::vector<std::pair<LatticePoint, LatticePoint>> positive;
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      Domain a(dim, {dom[i]}), b(dim, {dom[j]});
      if (determined_by(mu, a, b) && determined_by(mu, b, a)) {
        zero_steps.push_back(dom[j] - dom[i]);
        zero_steps.push_back(dom[i] - dom[j]);
      } else {
        positive.emplace_back(dom[i], dom[j]);
      }
    }
  EntropyChainResult out;
  if (zero_steps.empty() || positive.empty()) return out;
  std::sort(zero_steps.begin(), zero_steps.end());
  zero_steps.erase(std::unique(zero_steps.begin(), zero_steps.end()), zero_steps.end());

  // Zero distance is preserved by translation, so every x ~ x + d for a zero
  // step d, and the relation is transitive. Search the region around the
  // domain widened by the horizon.
  auto [lo, hi] = dom.bounding_box();
  for (std::size_t i = 0; i < dim; ++i) {
    lo[i] -= horizon;
    hi[i] += horizon;
  }
  auto inside = [&](const LatticePoint& p) {
    for (std::size_t i = 0; i < dim; ++i)
      if (p[i] < lo[i] || p[i] > hi[i]) return false;
    return true;
  };
  for (const auto& [from, to] : positive) {
    std::map<LatticePoint, LatticePoint> parent;
    std::deque<LatticePoint> queue{from};
    parent.emplace(from, from);
    while (!queue.empty() && !parent.count(to)) {
      LatticePoint x = queue.front();
      queue.pop_front();
      for (const auto& d : zero_steps) {
        LatticePoint y = x + d;
        if (!inside(y) || parent.count(y)) continue;
        parent.emplace(y, x);
        queue.push_back(y);
      }
      if (parent.size() > 4'000'000) throw CapExceeded("entropy chain search region too large");
    }
    if (!parent.count(to)) continue;
    out.verdict = EntropyChainResult::Verdict::Refuted;
    out.from = from;
    out.to = to;
    for (LatticePoint x = to;; x = parent.at(x)) {
      out.chain.push_back(x);
      if (x == from) break;
    }
    std::reverse(out.chain.begin(), out.chain.end());
    return out;
  }
  return out;
}

std::vector<Symbols> support_words(const SignedMeasure& mu) {
  std::vector<Symbols> out;
  for (std::size_t i = 0; i < mu.word_count(); ++i)
    if (sgn(mu.mass(i)) > 0) out.push_back(mu.word(i));
  return out;
}

}  // namespace extlab
