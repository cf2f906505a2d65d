#include "extlab/extension.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace extlab {

namespace {

std::string join_symbols(const Symbols& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

std::size_t project(const Symbols& word, const std::vector<std::size_t>& positions, int alphabet) {
  std::size_t idx = 0;
  for (auto p : positions) idx = idx * static_cast<std::size_t>(alphabet) + static_cast<std::size_t>(word[p]);
  return idx;
}

// Shifts whose overlap conditions imply local stationarity on the window.
// For a box, sliding by unit vectors reaches every pair of translates.
std::vector<LatticePoint> stationarity_shifts(const Domain& w) {
  if (!w.is_box()) return overlap_shifts(w);
  std::vector<LatticePoint> out;
  auto [lo, hi] = w.bounding_box();
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (hi[i] > lo[i]) out.push_back(LatticePoint::unit(w.dim(), i));
  return out;
}

void add_marginal_rows(LinearSystem& sys, const std::vector<Symbols>& words, const std::vector<std::size_t>& positions,
                       const Measure& base, const std::string& label) {
  std::map<std::size_t, std::vector<Term>> rows;
  for (std::size_t v = 0; v < words.size(); ++v)
    rows[project(words[v], positions, base.alphabet())].push_back(Term{v, 1});
  for (std::size_t b = 0; b < base.word_count(); ++b) {
    auto it = rows.find(b);
    if (it == rows.end() && sgn(base.mass(b)) == 0) continue;
    sys.add_constraint(it == rows.end() ? std::vector<Term>{} : std::move(it->second), Relation::Equal, base.mass(b),
                       label + " [" + join_symbols(base.word(b)) + "]");
  }
}

}  // namespace

WindowPolytope build_window_polytope(const Measure& base, const Domain& window, const PolytopeCaps& caps) {
  const Domain& u = base.domain();
  auto fits = translates_inside(u, window);
  if (fits.empty())
    throw std::invalid_argument("no translate of " + to_string(u) + " fits inside " + to_string(window));
  auto found = enumerate_window_configurations(support_of(base), window, caps.max_variables, caps.search);
  if (!found.complete)
    throw CapExceeded("window " + to_string(window) + " has more than " + std::to_string(caps.max_variables) +
                      " admissible words (or the search limit was reached)");

  WindowPolytope poly{window, base, std::move(found.configurations), {}};
  LinearSystem& sys = poly.system;
  const int a = base.alphabet();
  std::vector<Term> total;
  for (std::size_t v = 0; v < poly.words.size(); ++v) {
    sys.add_variable(join_symbols(poly.words[v]));
    total.push_back(Term{v, 1});
  }
  sys.add_constraint(std::move(total), Relation::Equal, 1, "total");

  for (const auto& k : stationarity_shifts(window)) {
    std::vector<LatticePoint> overlap;
    for (const auto& p : window)
      if (window.contains(p + k)) overlap.push_back(p);
    Domain o(window.dim(), overlap);
    auto here = o.positions_in(window);
    auto there = shift_domain(o, k).positions_in(window);
    std::map<std::size_t, std::vector<Term>> rows;
    for (std::size_t v = 0; v < poly.words.size(); ++v) {
      rows[project(poly.words[v], here, a)].push_back(Term{v, 1});
      rows[project(poly.words[v], there, a)].push_back(Term{v, -1});
    }
    for (auto& [b, terms] : rows)
      sys.add_constraint(std::move(terms), Relation::Equal, 0,
                         "shift " + to_string(k) + " [" + join_symbols(word_at(b, o.size(), a)) + "]");
  }

  for (const auto& k : fits)
    add_marginal_rows(sys, poly.words, shift_domain(u, k).positions_in(window), base, "marginal at " + to_string(k));
  return poly;
}

Measure window_measure(const WindowPolytope& poly, const std::vector<Rational>& x) {
  if (x.size() != poly.words.size()) throw std::invalid_argument("assignment size differs from the polytope");
  std::vector<Rational> m(checked_word_count(poly.window.size(), poly.base.alphabet()));
  for (std::size_t v = 0; v < x.size(); ++v) m[word_index(poly.words[v], poly.base.alphabet())] = x[v];
  return Measure(poly.window, poly.base.alphabet(), std::move(m));
}

TorusPolytope build_torus_polytope(const Measure& base, const PeriodVector& periods, const PolytopeCaps& caps) {
  FiniteModule m(periods);
  const Domain& u = base.domain();
  if (u.dim() != m.dim()) throw std::invalid_argument("period vector and domain differ in dimension");
  if (!is_injective_mod(m, u))
    throw std::invalid_argument(to_string(u) + " overlaps itself modulo the periods; the torus problem is ill-posed");
  auto found = enumerate_periodic_configurations(support_of(base), periods, caps.max_variables, caps.search);
  if (!found.complete)
    throw CapExceeded("more than " + std::to_string(caps.max_variables) +
                      " admissible torus configurations (or the search limit was reached)");

  TorusPolytope poly{m, base, std::move(found.configurations), {}};
  LinearSystem& sys = poly.system;
  std::vector<Term> total;
  for (std::size_t v = 0; v < poly.configurations.size(); ++v) {
    sys.add_variable(join_symbols(poly.configurations[v]));
    total.push_back(Term{v, 1});
  }
  sys.add_constraint(std::move(total), Relation::Equal, 1, "total");

  // Invariance under the unit shifts, which generate all translations.
  const std::size_t cells = static_cast<std::size_t>(m.cardinality());
  for (std::size_t axis = 0; axis < m.dim(); ++axis) {
    std::vector<std::size_t> source(cells);
    LatticePoint e = LatticePoint::unit(m.dim(), axis);
    for (std::size_t c = 0; c < cells; ++c) source[c] = static_cast<std::size_t>(m.index_of(m.element_at(c) - e));
    Symbols moved(cells);
    for (std::size_t v = 0; v < poly.configurations.size(); ++v) {
      const Symbols& cfg = poly.configurations[v];
      for (std::size_t c = 0; c < cells; ++c) moved[c] = cfg[source[c]];
      auto it = std::lower_bound(poly.configurations.begin(), poly.configurations.end(), moved);
      if (it == poly.configurations.end() || *it != moved)
        throw std::logic_error("admissible torus configurations are not closed under translation");
      auto w = static_cast<std::size_t>(it - poly.configurations.begin());
      if (w != v) sys.add_constraint({Term{v, 1}, Term{w, -1}}, Relation::Equal, 0, "shift e" + std::to_string(axis));
    }
  }

  std::vector<std::size_t> cells_of_u;
  for (const auto& p : u) cells_of_u.push_back(static_cast<std::size_t>(m.index_of(p)));
  add_marginal_rows(sys, poly.configurations, cells_of_u, base, "marginal");
  return poly;
}

Rational TorusMeasure::total() const {
  Rational t = 0;
  for (const auto& e : masses) t += e.second;
  return t;
}

TorusMeasure uniform_torus_measure(const FiniteModule& m, int alphabet) {
  const std::size_t cells = static_cast<std::size_t>(m.cardinality());
  const std::size_t n = checked_word_count(cells, alphabet);
  TorusMeasure out{m, alphabet, {}};
  out.masses.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.masses.emplace_back(word_at(i, cells, alphabet), Rational(1, n));
  return out;
}

PeriodicExtension periodic_extension(const Measure& base, const PeriodVector& periods, const PolytopeCaps& caps,
                                     const SolverOptions& opts) {
  TorusPolytope poly = build_torus_polytope(base, periods, caps);
  PeriodicExtension out;
  auto env = verify_envelope(Envelope{poly.module}, base.domain(), std::nullopt);
  if (env.status != EnvelopeCheck::Status::Pass)
    out.warnings.push_back("periods are not an envelope for the domain (translation " + to_string(env.witness_shift) +
                           " of " + to_string(env.witness_subset) +
                           " has no integer lift); the verdict concerns periodic extensions only");
  out.system_fingerprint = poly.system.fingerprint();
  out.variables = poly.system.variable_count();
  auto r = solve_feasibility(poly.system, opts);
  out.verdict = r.verdict;
  if (r.verdict != Feasibility::Feasible) return out;

  TorusMeasure nu{poly.module, base.alphabet(), {}};
  for (std::size_t v = 0; v < r.assignment.size(); ++v)
    if (sgn(r.assignment[v]) != 0) nu.masses.emplace_back(poly.configurations[v], r.assignment[v]);
  if (pullback_periodic(nu, base.domain()) != base)
    throw std::logic_error("periodic extension does not reproduce the base marginal");
  out.measure = std::move(nu);
  return out;
}

Measure pullback_periodic(const TorusMeasure& nu, const Domain& window) {
  const int a = nu.alphabet;
  std::vector<std::size_t> cell;
  for (const auto& p : window) cell.push_back(static_cast<std::size_t>(nu.module.index_of(p)));
  std::vector<Rational> m(checked_word_count(window.size(), a));
  for (const auto& [cfg, mass] : nu.masses) {
    std::size_t idx = 0;
    for (auto c : cell) idx = idx * static_cast<std::size_t>(a) + static_cast<std::size_t>(cfg.at(c));
    m[idx] += mass;
  }
  return Measure(window, a, std::move(m));
}

std::uint64_t compute_H(const FiniteModule& m, const Domain& u, int alphabet) {
  if (!is_injective_mod(m, u)) throw std::invalid_argument(to_string(u) + " overlaps itself modulo the periods");
  const std::size_t k = u.size();
  const std::uint64_t card = m.cardinality();
  std::vector<LatticePoint> image;
  for (const auto& p : u) image.push_back(m.reduce(p));

  using Character = std::vector<std::pair<std::uint64_t, int>>;  // (cell, nonzero exponent), sorted
  std::set<Character> seen_orbits;
  std::uint64_t h = 0;
  const std::size_t count = checked_word_count(k, alphabet);
  for (std::size_t e = 0; e < count; ++e) {
    Symbols expo = word_at(e, k, alphabet);
    std::set<Character> orbit;
    for (std::uint64_t gi = 0; gi < card; ++gi) {
      LatticePoint g = m.element_at(gi);
      Character chi;
      for (std::size_t i = 0; i < k; ++i)
        if (expo[i] != 0) chi.emplace_back(m.index_of(image[i] + g), expo[i]);
      std::sort(chi.begin(), chi.end());
      orbit.insert(std::move(chi));
    }
    if (seen_orbits.insert(*orbit.begin()).second) h += orbit.size();
  }

  BigInt bound_a, bound_b;
  mpz_ui_pow_ui(bound_a.get_mpz_t(), static_cast<unsigned long>(alphabet), static_cast<unsigned long>(card));
  mpz_ui_pow_ui(bound_b.get_mpz_t(), static_cast<unsigned long>(alphabet), static_cast<unsigned long>(k));
  bound_b *= static_cast<unsigned long>(card);
  BigInt hb = static_cast<unsigned long>(h);
  if (hb > bound_a || hb > bound_b) throw std::logic_error("orbit sum exceeds its a priori bounds");
  return h;
}

Rational epsilon_bound(const TorusMeasure& nu, const Domain& u) {
  BigInt full;
  mpz_ui_pow_ui(full.get_mpz_t(), static_cast<unsigned long>(nu.alphabet),
                static_cast<unsigned long>(nu.module.cardinality()));
  std::set<Symbols> distinct;
  Rational lowest;
  for (const auto& [cfg, mass] : nu.masses) {
    if (sgn(mass) <= 0) continue;
    distinct.insert(cfg);
    if (distinct.size() == 1 || mass < lowest) lowest = mass;
  }
  if (BigInt(static_cast<unsigned long>(distinct.size())) != full)
    throw std::invalid_argument("epsilon_bound needs a torus measure charging every configuration");
  return lowest / Rational(static_cast<unsigned long>(compute_H(nu.module, u, nu.alphabet)));
}

std::vector<Domain> usable_windows(const Domain& u, const std::vector<Domain>& schedule) {
  std::vector<Domain> out;
  for (const auto& w : schedule)
    if (w.dim() == u.dim() && !translates_inside(u, w).empty()) out.push_back(w);
  return out;
}

RefutationReport refute_nonextendible(const Measure& base, const std::vector<Domain>& schedule,
                                      const RefutationCaps& caps) {
  if (!is_locally_stationary(base).stationary)
    throw std::invalid_argument("refute_nonextendible: the measure is not locally stationary");
  RefutationReport rep;
  auto windows = usable_windows(base.domain(), schedule);
  if (windows.empty()) {
    rep.reason = "no window in the schedule contains a translate of " + to_string(base.domain());
    return rep;
  }

  Coord horizon = 0;
  if (caps.entropy_horizon) {
    horizon = *caps.entropy_horizon;
  } else {
    auto [lo, hi] = windows.back().bounding_box();
    for (std::size_t i = 0; i < lo.dim(); ++i) horizon = std::max(horizon, hi[i] - lo[i] + 1);
  }
  auto chain = entropy_chain_refute(base, horizon);
  if (chain.verdict == EntropyChainResult::Verdict::Refuted) {
    rep.methods.push_back("entropy-chain");
    rep.chain = chain.chain;
  }

  auto tiling = sft_emptiness(support_of(base), windows, caps.search);
  std::size_t last = windows.size();
  if (tiling.verdict == EmptinessResult::Verdict::Empty) {
    rep.methods.push_back("tiling");
    rep.empty_window = tiling.empty_window;
    last = static_cast<std::size_t>(std::find(windows.begin(), windows.end(), *tiling.empty_window) - windows.begin()) + 1;
  } else if (!tiling.reason.empty()) {
    rep.reason = "tiling: " + tiling.reason;
  }

  PolytopeCaps pcaps{caps.max_lp_variables, caps.search};
  for (std::size_t i = 0; i < last; ++i) {
    const Domain& w = windows[i];
    std::optional<WindowPolytope> poly;
    try {
      poly = build_window_polytope(base, w, pcaps);
    } catch (const CapExceeded& e) {
      rep.reason += std::string(rep.reason.empty() ? "" : "; ") + "lp: " + e.what();
      break;
    }
    auto r = solve_feasibility(poly->system, caps.solver);
    if (r.verdict == Feasibility::Aborted) {
      rep.reason += std::string(rep.reason.empty() ? "" : "; ") + "lp: pivot limit reached at window " + to_string(w);
      break;
    }
    rep.largest_window_tried = w;
    if (r.verdict == Feasibility::Infeasible) {
      rep.methods.push_back("lp");
      rep.window = w;
      rep.system_fingerprint = poly->system.fingerprint();
      break;
    }
  }
  if (!rep.methods.empty()) rep.verdict = RefutationReport::Verdict::Refuted;
  return rep;
}

}  // namespace extlab
