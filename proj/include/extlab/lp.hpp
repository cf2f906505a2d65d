#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "extlab/rational.hpp"

namespace extlab {

enum class Relation { Equal, AtLeast, AtMost };

struct Term {
  std::size_t var;
  Rational coef;
};

struct Constraint {
  std::vector<Term> terms;  // sorted by variable, no zero coefficients
  Relation relation = Relation::Equal;
  Rational rhs;
  std::string label;
};

class LinearSystem {
 public:
  std::size_t add_variable(std::string name, bool nonnegative = true);
  // Repeated variables are merged and zero coefficients dropped.
  void add_constraint(std::vector<Term> terms, Relation relation, Rational rhs, std::string label = {});

  std::size_t variable_count() const { return names_.size(); }
  const std::string& name(std::size_t var) const { return names_.at(var); }
  bool nonnegative(std::size_t var) const { return nonneg_.at(var); }
  const std::vector<Constraint>& constraints() const { return rows_; }

  bool satisfied_by(const std::vector<Rational>& x) const;

  // One line per variable bound and per constraint, rationals as p/q.
  std::string dump() const;
  // FNV-1a of dump(); identifies the system in reports.
  std::uint64_t fingerprint() const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> nonneg_;
  std::vector<Constraint> rows_;
};

enum class Feasibility { Feasible, Infeasible, Aborted };

const char* to_string(Feasibility f);

struct SolverOptions {
  std::size_t pivot_limit = 1'000'000;
};

struct FeasibilityResult {
  Feasibility verdict = Feasibility::Infeasible;
  std::vector<Rational> assignment;  // a vertex when Feasible
  std::size_t pivots = 0;
};

// Exact two-phase simplex, Dantzig pricing with a fallback to Bland's rule
// on long degenerate runs. Constraints of the form x_i - x_j = 0 are folded
// into a single column before pivoting.
FeasibilityResult solve_feasibility(const LinearSystem& sys, const SolverOptions& opts = {});

struct VertexEnumeration {
  Feasibility verdict = Feasibility::Infeasible;
  std::vector<std::vector<Rational>> vertices;  // distinct, in discovery order
  std::size_t attempts = 0;
};

// Minimizes random integer objectives from the first feasible basis and
// keeps the distinct optimal vertices. Assumes a bounded polytope.
VertexEnumeration enumerate_vertices(const LinearSystem& sys, std::size_t max_vertices, std::uint64_t seed = 0,
                                     std::size_t max_attempts = 0, const SolverOptions& opts = {});

}  // namespace extlab
