// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures (capped at 1 for ctest).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "extlab/corpus.hpp"
#include "extlab/extension.hpp"
#include "extlab/harmonic.hpp"
#include "extlab/markov.hpp"
#include "support.hpp"

using namespace extlab;
using namespace extlab::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later checks still run so the detail names it.
struct Checker {
  Outcome out;
  void require(bool ok, const std::string& what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

bool same_masses(const SignedMeasure& a, const SignedMeasure& b) {
  return a.alphabet() == b.alphabet() && a.masses() == b.masses();
}

Outcome markov_consistency() {
  Checker c;
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const Coord u = uniform_int(rng, 0, 3);
    const int a = uniform_int(rng, 2, 3);
    Measure base = random_stationary_measure(rng, Domain::interval(0, u), a);
    MarkovExtension ext(base);
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, static_cast<int>(u) + 1, 7));
    Measure w = markov_window_measure(ext, n);
    for (const auto& k : translates_inside(base.domain(), w.domain()))
      c.require(same_masses(marginal(w, shift_domain(base.domain(), k)), base),
                "trial " + std::to_string(trial) + ": marginal differs at shift " + to_string(k));
  }
  if (c.out.pass) c.out.detail = "50 bases, all translates exact";
  return c.out;
}

Outcome maximal_entropy() {
  Checker c;
  Rng rng(2);
  std::size_t vertices = 0;
  for (int trial = 0; trial < 12 && vertices < 200; ++trial) {
    Measure base = random_stationary_measure(rng, Domain::interval(0, 1), 2);
    MarkovExtension ext(base);
    for (Coord n : {3, 4}) {
      WindowPolytope poly = build_window_polytope(base, Domain::interval(0, n - 1));
      auto v = enumerate_vertices(poly.system, 64, static_cast<std::uint64_t>(trial * 10 + n));
      c.require(v.verdict == Feasibility::Feasible, "window polytope of an extendible base is infeasible");
      const double bound = finite_window_entropy(markov_window_measure(ext, static_cast<std::size_t>(n)));
      for (const auto& x : v.vertices) {
        const double h = finite_window_entropy(window_measure(poly, x));
        c.require(h <= bound + 1e-9, "vertex entropy " + std::to_string(h) + " exceeds Markov " + std::to_string(bound));
      }
      vertices += v.vertices.size();
    }
  }
  c.require(vertices >= 50, "only " + std::to_string(vertices) + " vertices found");
  if (c.out.pass) c.out.detail = std::to_string(vertices) + " vertices checked";
  return c.out;
}

Outcome disconnected_refuted() {
  Checker c;
  Measure mu = disconnected_counterexample(2, {Rational(1, 2), Rational(1, 2)});
  auto r = refute_nonextendible(mu, box_schedule(mu.domain(), 6));
  c.require(r.verdict == RefutationReport::Verdict::Refuted, "refute did not refute");
  c.require(r.window && *r.window == Domain::interval(0, 3), "LP window is not [0..3]");
  auto e = entropy_chain_refute(mu, 3);
  c.require(e.verdict == EntropyChainResult::Verdict::Refuted, "entropy chain did not refute");
  if (c.out.pass) c.out.detail = "LP infeasible on [0..3]; entropy chain of length " + std::to_string(e.chain.size());
  return c.out;
}

Outcome pseudolattice_refuted() {
  Checker c;
  Measure mu = pseudolattice_measure();
  c.require(is_locally_stationary(mu).stationary, "not locally stationary");
  auto t = sft_emptiness(support_of(mu), box_schedule(mu.domain(), 6));
  c.require(t.verdict == EmptinessResult::Verdict::Empty, "support subshift not shown empty");
  // Frozen from an independent backtracking oracle: first empty box has side 4.
  c.require(t.empty_window && *t.empty_window == box_schedule(mu.domain(), 4).back(), "empty window is not the side-4 box");
  auto r = refute_nonextendible(mu, box_schedule(mu.domain(), 6));
  c.require(r.verdict == RefutationReport::Verdict::Refuted, "refute did not refute");
  if (c.out.pass) c.out.detail = "stationary; empty at side 4; refuted";
  return c.out;
}

Outcome periodic_lp() {
  Checker c;
  Measure uni = Measure::uniform(Domain::box({0, 0}, {1, 1}), 2);
  auto r = periodic_extension(uni, {4, 4});
  c.require(r.verdict == Feasibility::Feasible, "uniform product infeasible at (4,4)");
  if (r.measure) {
    Measure lifted = pullback_periodic(*r.measure, Domain::box({0, 0}, {3, 3}));
    for (const auto& k : translates_inside(uni.domain(), lifted.domain()))
      c.require(same_masses(marginal(lifted, shift_domain(uni.domain(), k)), uni), "pullback marginal differs at " + to_string(k));
  }
  Measure counter = binary_counter_measure(3);
  c.require(periodic_extension(counter, {4, 8}).verdict == Feasibility::Feasible, "counter(3) infeasible at (4,8)");
  if (periodic_extension(counter, {4, 4}).verdict != Feasibility::Infeasible) {
    auto e = enumerate_periodic_configurations(binary_counter_words(3), {4, 4}, 1000);
    c.require(false, "counter(3) feasible at (4,4); its word set admits " + std::to_string(e.configurations.size()) +
                         " configurations on the 4x4 torus");
  }
  if (c.out.pass) c.out.detail = "uniform (4,4) feasible, pullback exact; counter(3) feasible (4,8), infeasible (4,4)";
  return c.out;
}

Outcome epsilon_ball() {
  Checker c;
  FiniteModule z4{PeriodVector{4}};
  Domain u = Domain::interval(0, 1);
  const std::uint64_t h = compute_H(z4, u, 2);
  c.require(h == 9, "H = " + std::to_string(h));
  const Rational eps = epsilon_bound(uniform_torus_measure(z4, 2), u);
  c.require(eps == Rational(1, 144), "epsilon = " + to_string(eps));

  Rng rng(6);
  Measure centre = Measure::uniform(u, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Measure other = random_stationary_measure(rng, u, 2);
    Measure mu = convex_combine(centre, other, Rational(1, 577 + uniform_int(rng, 0, 400)));
    c.require(tv_distance(mu, centre) < Rational(1, 288), "perturbation too large");
    c.require(periodic_extension(mu, {4}).verdict == Feasibility::Feasible, "perturbation " + std::to_string(trial) + " infeasible");
  }

  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const int a = uniform_int(rng, 2, 3);
    std::vector<Coord> per(dim);
    for (auto& p : per) p = uniform_int(rng, 1, dim == 1 ? 5 : 3);
    FiniteModule m{PeriodVector(per)};
    std::vector<LatticePoint> pts;
    for (const auto& p : m.cells())
      if (uniform_int(rng, 0, 1) || pts.empty()) pts.push_back(p);
    if (pts.size() > 4) pts.resize(4);
    Domain sub(dim, pts);
    const std::uint64_t hm = compute_H(m, sub, a);
    BigInt cells = static_cast<unsigned long>(m.cardinality());
    BigInt bound_a, bound_b, au;
    mpz_ui_pow_ui(bound_a.get_mpz_t(), static_cast<unsigned long>(a), m.cardinality());
    mpz_ui_pow_ui(au.get_mpz_t(), static_cast<unsigned long>(a), sub.size());
    bound_b = cells * au;
    const BigInt hz = static_cast<unsigned long>(hm);
    c.require(hz <= bound_a && hz <= bound_b, "H exceeds a printed bound for " + to_string(sub));
  }
  if (c.out.pass) c.out.detail = "H=9, eps=1/144, 20 perturbations feasible, bounds hold on 20 pairs";
  return c.out;
}

Outcome envelopes() {
  Checker c;
  const Domain square = Domain::box({0, 0}, {2, 2});
  std::size_t checked = 0;
  for (unsigned mask = 1; mask < (1u << square.size()); ++mask) {
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < square.size(); ++i)
      if (mask >> i & 1u) pts.push_back(square[i]);
    Domain u(2, pts);
    auto r = verify_envelope(envelope_for(u), u, std::nullopt);
    c.require(r.status == EnvelopeCheck::Status::Pass, "doubled envelope fails for " + to_string(u));
    ++checked;
  }
  // Undoubled periods on a full row: V = {v1, v2} is sent onto the images of
  // {v3, v1} by g~ = (N1-1, 0), which no integer shift realizes.
  for (Coord n1 : {3, 4, 5}) {
    Domain row = Domain::box({1, 1}, {n1, 1});
    auto r = verify_envelope(Envelope{FiniteModule{PeriodVector{n1, 1}}}, row, std::nullopt);
    c.require(r.status == EnvelopeCheck::Status::Fail && r.failure == EnvelopeCheck::Failure::NoIntegerShift,
              "undoubled row of length " + std::to_string(n1) + " passes");
    c.require(r.witness_subset == Domain(2, {{1, 1}, {2, 1}}), "witness subset is " + to_string(r.witness_subset));
    c.require(r.witness_shift == LatticePoint{n1 - 1, 0}, "witness shift is " + to_string(r.witness_shift));
  }
  if (c.out.pass) c.out.detail = std::to_string(checked) + " subsets pass; row counterexample witnesses match";
  return c.out;
}

Outcome harmonic() {
  Checker c;
  Rng rng(8);
  double worst = 0;
  const std::vector<Domain> domains = {Domain::interval(0, 2), Domain(1, {{0}, {1}, {3}}), Domain::box({0, 0}, {1, 1})};
  for (int trial = 0; trial < 200; ++trial) {
    const Domain& d = domains[static_cast<std::size_t>(trial) % domains.size()];
    const int a = uniform_int(rng, 2, 3);
    Measure mu = trial % 2 ? random_stationary_measure(rng, d, a) : random_measure(rng, d, a);
    c.require(check_stationarity_fourier(mu).pass == is_locally_stationary(mu).stationary,
              "stationarity tests disagree on trial " + std::to_string(trial));

    auto inv = inverse_fourier(fourier_transform(mu));
    for (std::size_t i = 0; i < inv.size(); ++i) worst = std::max(worst, std::abs(inv[i] - mu.mass(i).get_d()));

    // Extension check: W is the domain, U a proper subdomain; half the time
    // the candidate U-measure is perturbed.
    std::vector<LatticePoint> sub(d.points().begin(), d.points().end() - 1);
    Domain u(d.dim(), sub);
    Measure exact = marginal(mu, u);
    Measure cand = trial % 4 < 2 ? exact : convex_combine(exact, random_measure(rng, u, a), Rational(1, 3));
    c.require(check_extension_fourier(cand, mu).pass == (cand.masses() == exact.masses()),
              "extension tests disagree on trial " + std::to_string(trial));
  }
  c.require(worst < 1e-12, "round-trip error " + std::to_string(worst));
  if (c.out.pass) {
    std::ostringstream s;
    s << "200 measures agree; round-trip error " << worst;
    c.out.detail = s.str();
  }
  return c.out;
}

Outcome ca_encoding() {
  Checker c;
  const auto rule = elementary_rule(110);
  WordSet t = ca_to_sft(rule, Domain::interval(-1, 1), 2);
  c.require(t.words.size() == 8, "encoded word set has " + std::to_string(t.words.size()) + " words");
  const Domain block = Domain::box({0, 0}, {5, 1});
  auto e = enumerate_window_configurations(t, block, 1u << 12);
  std::set<Symbols> got(e.configurations.begin(), e.configurations.end()), want;
  for (unsigned m = 0; m < (1u << 12); ++m) {
    Symbols cfg(12);
    for (std::size_t i = 0; i < 12; ++i) cfg[i] = static_cast<int>(m >> i & 1u);
    auto at = [&](int x, int y) { return cfg[static_cast<std::size_t>(2 * x + y)]; };
    bool ok = true;
    for (int x = 1; x <= 4; ++x) ok = ok && at(x, 1) == rule[static_cast<std::size_t>(at(x - 1, 0) << 2 | at(x, 0) << 1 | at(x + 1, 0))];
    if (ok) want.insert(cfg);
  }
  c.require(e.complete && got == want, "block sets differ");
  if (c.out.pass) c.out.detail = std::to_string(got.size()) + " admissible 6x2 blocks match brute force";
  return c.out;
}

Outcome robinson() {
  Checker c;
  std::uint64_t nodes = 0;
  for (auto reading : {RobinsonReading::DistinctLetter, RobinsonReading::TypoForC}) {
    WordSet t = robinson_tileset(reading);
    for (Coord p1 = 1; p1 <= 4; ++p1)
      for (Coord p2 = 1; p2 <= 4; ++p2) {
        auto r = periodic_config_search(t, {p1, p2});
        nodes += r.nodes;
        c.require(r.status == PeriodicSearchResult::Status::None,
                  "periods (" + std::to_string(p1) + "," + std::to_string(p2) + ") not excluded");
      }
    auto sched = box_schedule(t.domain, 6);
    auto e = sft_emptiness(t, sched);
    nodes += e.nodes;
    c.require(e.verdict == EmptinessResult::Verdict::Unknown && e.reason.empty() && e.largest_window_checked == sched.back(),
              "emptiness search did not stay Unknown through side 6");
  }
  if (c.out.pass) c.out.detail = "no periodic configuration up to (4,4); Unknown through side 6 (" + std::to_string(nodes) + " nodes)";
  return c.out;
}

Outcome soundness() {
  Checker c;
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Coord u = uniform_int(rng, 1, 2);
    const int a = uniform_int(rng, 2, 3);
    MarkovExtension ext(random_stationary_measure(rng, Domain::interval(0, u), a));
    const Coord n = u + 3;
    Measure w = markov_window_measure(ext, static_cast<std::size_t>(n));
    std::vector<LatticePoint> pts{{0}};
    for (Coord x = 1; x < n; ++x)
      if (uniform_int(rng, 0, 1)) pts.push_back({x});
    if (pts.size() == 1) pts.push_back({n - 1});
    Measure mu = marginal(w, Domain(1, pts));
    const std::size_t side = std::min<std::size_t>(a == 2 ? 7 : 5, static_cast<std::size_t>(n) + 1);
    auto r = refute_nonextendible(mu, box_schedule(mu.domain(), side));
    c.require(r.verdict == RefutationReport::Verdict::Unknown, "extendible marginal on " + to_string(mu.domain()) + " was refuted");
  }
  if (c.out.pass) c.out.detail = "100 extendible marginals, none refuted";
  return c.out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"markov-consistency", markov_consistency},
      {"maximal-entropy", maximal_entropy},
      {"disconnected-counterexample", disconnected_refuted},
      {"pseudolattice-counterexample", pseudolattice_refuted},
      {"periodic-extension-lp", periodic_lp},
      {"epsilon-ball", epsilon_ball},
      {"envelopes", envelopes},
      {"harmonic-equivalences", harmonic},
      {"ca-encoding", ca_encoding},
      {"robinson-evidence", robinson},
      {"soundness-guard", soundness},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %-30s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", index, name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures ? 1 : 0;
}
