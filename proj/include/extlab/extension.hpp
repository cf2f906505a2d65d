#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extlab/lp.hpp"
#include "extlab/measure.hpp"
#include "extlab/sft.hpp"

namespace extlab {

struct PolytopeCaps {
  std::size_t max_variables = 1u << 17;
  SearchLimits search;
};

// Locally stationary measures on a window whose marginal on every translate
// of U inside the window equals the base. Variables are the window words
// whose every U-translate lies in the support of the base; all other words
// are forced to mass zero by the marginal constraints.
struct WindowPolytope {
  Domain window;
  Measure base;
  std::vector<Symbols> words;  // variable i is the mass of words[i]
  LinearSystem system;
};

WindowPolytope build_window_polytope(const Measure& base, const Domain& window, const PolytopeCaps& caps = {});

// Dense window measure from an assignment to the polytope's variables.
Measure window_measure(const WindowPolytope& poly, const std::vector<Rational>& assignment);

// Shift-invariant measures on the torus with marginal on phi(U) equal to the
// base. Variables are torus configurations all of whose translates of
// phi(U) carry a support word of the base.
struct TorusPolytope {
  FiniteModule module;
  Measure base;
  std::vector<Symbols> configurations;  // cell symbols in module order
  LinearSystem system;
};

TorusPolytope build_torus_polytope(const Measure& base, const PeriodVector& periods, const PolytopeCaps& caps = {});

// Sparse measure on A^(torus); omitted configurations have mass zero.
struct TorusMeasure {
  FiniteModule module;
  int alphabet = 2;
  std::vector<std::pair<Symbols, Rational>> masses;  // sorted by configuration

  Rational total() const;
};

TorusMeasure uniform_torus_measure(const FiniteModule& m, int alphabet);

struct PeriodicExtension {
  Feasibility verdict = Feasibility::Infeasible;
  std::optional<TorusMeasure> measure;
  std::vector<std::string> warnings;
  std::uint64_t system_fingerprint = 0;
  std::size_t variables = 0;
};

PeriodicExtension periodic_extension(const Measure& base, const PeriodVector& periods,
                                     const PolytopeCaps& caps = {}, const SolverOptions& opts = {});

Measure pullback_periodic(const TorusMeasure& nu, const Domain& window);

// Sum of orbit sizes over the distinct translation orbits of characters of
// A^(torus) supported on phi(U).
std::uint64_t compute_H(const FiniteModule& m, const Domain& u, int alphabet);

// (min mass of nu) / H; nu must charge every torus configuration.
Rational epsilon_bound(const TorusMeasure& nu, const Domain& u);

struct RefutationCaps {
  std::optional<Coord> entropy_horizon;  // default: side of the largest window
  std::size_t max_lp_variables = 1u << 14;
  SearchLimits search;
  SolverOptions solver;
};

struct RefutationReport {
  enum class Verdict { Refuted, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> methods;      // "entropy-chain", "tiling", "lp"
  std::optional<Domain> window;          // first window whose LP is infeasible
  std::optional<std::uint64_t> system_fingerprint;
  std::uint64_t seed = 0;                // pivoting is deterministic
  std::optional<Domain> empty_window;    // tiling
  std::vector<LatticePoint> chain;       // entropy chain
  std::optional<Domain> largest_window_tried;
  std::string reason;
};

RefutationReport refute_nonextendible(const Measure& base, const std::vector<Domain>& schedule,
                                      const RefutationCaps& caps = {});

// Windows from a schedule that contain a translate of U.
std::vector<Domain> usable_windows(const Domain& u, const std::vector<Domain>& schedule);

}  // namespace extlab
