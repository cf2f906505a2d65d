#include "extlab/lp.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace extlab {

std::size_t LinearSystem::add_variable(std::string name, bool nonnegative) {
  names_.push_back(std::move(name));
  nonneg_.push_back(nonnegative);
  return names_.size() - 1;
}

void LinearSystem::add_constraint(std::vector<Term> terms, Relation relation, Rational rhs, std::string label) {
  for (const auto& t : terms)
    if (t.var >= names_.size()) throw std::invalid_argument("constraint references undeclared variable " + std::to_string(t.var));
  // Callers may build mpq values from (num, den) pairs, which GMP leaves
  // uncanonicalized; arithmetic on those is undefined.
  for (auto& t : terms) t.coef.canonicalize();
  rhs.canonicalize();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().var == t.var)
      merged.back().coef += t.coef;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coef) == 0; });
  rows_.push_back(Constraint{std::move(merged), relation, std::move(rhs), std::move(label)});
}

bool LinearSystem::satisfied_by(const std::vector<Rational>& x) const {
  if (x.size() != names_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (nonneg_[i] && sgn(x[i]) < 0) return false;
  for (const auto& c : rows_) {
    Rational lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * x[t.var];
    switch (c.relation) {
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::AtLeast:
        if (lhs < c.rhs) return false;
        break;
      case Relation::AtMost:
        if (lhs > c.rhs) return false;
        break;
    }
  }
  return true;
}

std::string LinearSystem::dump() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < names_.size(); ++i)
    os << "var " << names_[i] << (nonneg_[i] ? " >= 0" : " free") << "\n";
  for (const auto& c : rows_) {
    if (!c.label.empty()) os << c.label << ": ";
    if (c.terms.empty()) os << "0";
    for (std::size_t k = 0; k < c.terms.size(); ++k) {
      const auto& t = c.terms[k];
      os << (k ? " " : "") << (sgn(t.coef) < 0 ? "- " : (k ? "+ " : "")) << to_string(Rational(abs(t.coef)))
         << " " << names_[t.var];
    }
    os << (c.relation == Relation::Equal ? " = " : c.relation == Relation::AtLeast ? " >= " : " <= ")
       << to_string(c.rhs) << "\n";
  }
  return os.str();
}

std::uint64_t LinearSystem::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible:
      return "feasible";
    case Feasibility::Infeasible:
      return "infeasible";
    case Feasibility::Aborted:
      return "aborted";
  }
  return "?";
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Standard form  A x = b, x >= 0, b >= 0, with an artificial column per row.
class Tableau {
 public:
  enum class Outcome { Optimal, Unbounded, PivotLimit };

  Tableau(std::size_t rows, std::size_t structural)
      : m_(rows), n_(structural), width_(structural + 1), t_(rows * width_), basis_(rows), obj_(width_) {
    // Row i starts with artificial n_ + i basic. Artificials never re-enter,
    // so their columns are not stored.
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
  }

  Rational& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }
  Rational& rhs(std::size_t i) { return at(i, width_ - 1); }
  std::size_t rows() const { return m_; }
  std::size_t structural() const { return n_; }
  std::size_t pivots() const { return pivots_; }

  // Phase one: minimize the sum of artificials. Returns false if the pivot
  // limit was hit.
  std::optional<bool> phase_one(std::size_t pivot_limit) {
    std::fill(obj_.begin(), obj_.end(), Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(at(i, j)) != 0) obj_[j] -= at(i, j);
    for (std::size_t i = 0; i < m_; ++i) obj_[width_ - 1] -= rhs(i);
    auto r = run(n_, pivot_limit);  // artificials never need to re-enter
    if (r == Outcome::PivotLimit) return std::nullopt;
    if (sgn(obj_[width_ - 1]) != 0) return false;
    drive_out_artificials();
    return true;
  }

  // Minimize cost . x over structural columns from the current basis.
  Outcome optimize(const std::vector<Rational>& cost, std::size_t pivot_limit) {
    std::fill(obj_.begin(), obj_.end(), Rational(0));
    for (std::size_t j = 0; j < n_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) continue;
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (sgn(at(i, j)) != 0) obj_[j] -= cb * at(i, j);
    }
    return run(n_, pivot_limit);
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = at(i, width_ - 1);
    return x;
  }

 private:
  // Dantzig's rule over columns [0, allowed), switching to Bland's rule once
  // a run of degenerate pivots is far longer than the row count (a likely
  // cycle). Every non-degenerate pivot strictly lowers the objective and
  // Bland's rule cannot cycle, so this terminates. Switching earlier costs
  // many pivots on the highly degenerate stationarity rows.
  Outcome run(std::size_t allowed, std::size_t pivot_limit) {
    const std::size_t stall_before_bland = 10 * m_ + 100;
    std::size_t stall = 0;
    while (true) {
      const bool bland = stall >= stall_before_bland;
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(obj_[j]) >= 0) continue;
        if (enter == allowed || (!bland && obj_[j] < obj_[enter])) enter = j;
        if (bland) break;
      }
      if (enter == allowed) return Outcome::Optimal;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        Rational ratio = at(i, width_ - 1) / at(i, enter);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return Outcome::Unbounded;
      if (pivots_ >= pivot_limit) return Outcome::PivotLimit;
      stall = sgn(best) == 0 ? stall + 1 : 0;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    const Rational inv = 1 / at(r, c);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width_; ++j)
      if (sgn(at(r, j)) != 0) {
        at(r, j) *= inv;
        nz.push_back(j);
      }
    Rational f;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(at(i, c)) == 0) continue;
      f = at(i, c);
      for (std::size_t j : nz) at(i, j) -= f * at(r, j);
    }
    if (sgn(obj_[c]) != 0) {
      f = obj_[c];
      for (std::size_t j : nz) obj_[j] -= f * at(r, j);
    }
    basis_[r] = c;
  }

  // After a zero-cost phase one, swap basic artificials for structural
  // columns; rows where that is impossible are redundant and are removed.
  void drive_out_artificials() {
    std::vector<bool> redundant(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(at(i, j)) != 0) {
          col = j;
          break;
        }
      if (col == n_)
        redundant[i] = true;
      else
        pivot(i, col);
    }
    std::size_t keep = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (redundant[i]) continue;
      if (keep != i) {
        for (std::size_t j = 0; j < width_; ++j) at(keep, j) = std::move(at(i, j));
        basis_[keep] = basis_[i];
      }
      ++keep;
    }
    m_ = keep;
    t_.resize(m_ * width_);
    basis_.resize(m_);
  }

  std::size_t m_, n_, width_;
  std::vector<Rational> t_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> obj_;
  std::size_t pivots_ = 0;
};

// The system after folding aliased variables and splitting free ones.
struct StandardForm {
  bool trivially_infeasible = false;
  std::vector<std::size_t> cls;         // original variable -> class
  std::vector<std::size_t> pos_col;     // class -> column
  std::vector<std::ptrdiff_t> neg_col;  // class -> column for the negative part, or -1
  std::size_t columns = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  std::vector<Rational> rhs;
};

StandardForm standardize(const LinearSystem& sys) {
  const std::size_t n = sys.variable_count();
  DisjointSets ds(n);
  std::vector<bool> folded(sys.constraints().size(), false);
  for (std::size_t r = 0; r < sys.constraints().size(); ++r) {
    const auto& c = sys.constraints()[r];
    if (c.relation != Relation::Equal || sgn(c.rhs) != 0 || c.terms.size() != 2) continue;
    if (c.terms[0].coef + c.terms[1].coef != 0) continue;
    ds.unite(c.terms[0].var, c.terms[1].var);
    folded[r] = true;
  }

  StandardForm sf;
  sf.cls.assign(n, 0);
  std::vector<std::size_t> root_class(n, n);
  std::size_t classes = 0;
  std::vector<bool> class_nonneg;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t root = ds.find(v);
    if (root_class[root] == n) {
      root_class[root] = classes++;
      class_nonneg.push_back(false);
    }
    sf.cls[v] = root_class[root];
    if (sys.nonnegative(v)) class_nonneg[sf.cls[v]] = true;
  }
  sf.pos_col.resize(classes);
  sf.neg_col.assign(classes, -1);
  for (std::size_t k = 0; k < classes; ++k) {
    sf.pos_col[k] = sf.columns++;
    if (!class_nonneg[k]) sf.neg_col[k] = static_cast<std::ptrdiff_t>(sf.columns++);
  }

  std::vector<std::pair<std::vector<std::pair<std::size_t, Rational>>, std::pair<Relation, Rational>>> pending;
  for (std::size_t r = 0; r < sys.constraints().size(); ++r) {
    if (folded[r]) continue;
    const auto& c = sys.constraints()[r];
    std::vector<std::pair<std::size_t, Rational>> row;
    for (const auto& t : c.terms) row.emplace_back(sf.cls[t.var], t.coef);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::size_t, Rational>> merged;
    for (auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
    if (merged.empty()) {
      int s = sgn(c.rhs);
      bool ok = c.relation == Relation::Equal ? s == 0 : c.relation == Relation::AtLeast ? s <= 0 : s >= 0;
      if (!ok) sf.trivially_infeasible = true;
      continue;
    }
    pending.push_back({std::move(merged), {c.relation, c.rhs}});
  }

  for (auto& [row, rel] : pending) {
    std::vector<std::pair<std::size_t, Rational>> cols;
    for (auto& [k, coef] : row) {
      cols.emplace_back(sf.pos_col[k], coef);
      if (sf.neg_col[k] >= 0) cols.emplace_back(static_cast<std::size_t>(sf.neg_col[k]), -coef);
    }
    if (rel.first == Relation::AtLeast) cols.emplace_back(sf.columns++, Rational(-1));
    if (rel.first == Relation::AtMost) cols.emplace_back(sf.columns++, Rational(1));
    Rational b = rel.second;
    if (sgn(b) < 0) {
      for (auto& e : cols) e.second = -e.second;
      b = -b;
    }
    sf.rows.push_back(std::move(cols));
    sf.rhs.push_back(std::move(b));
  }
  return sf;
}

Tableau make_tableau(const StandardForm& sf) {
  Tableau t(sf.rows.size(), sf.columns);
  for (std::size_t i = 0; i < sf.rows.size(); ++i) {
    for (const auto& [j, coef] : sf.rows[i]) t.at(i, j) = coef;
    t.rhs(i) = sf.rhs[i];
  }
  return t;
}

std::vector<Rational> recover(const StandardForm& sf, const std::vector<Rational>& cols) {
  std::vector<Rational> x(sf.cls.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    const std::size_t k = sf.cls[v];
    x[v] = cols[sf.pos_col[k]];
    if (sf.neg_col[k] >= 0) x[v] -= cols[static_cast<std::size_t>(sf.neg_col[k])];
  }
  return x;
}

void verify(const LinearSystem& sys, const std::vector<Rational>& x) {
  if (!sys.satisfied_by(x)) throw std::logic_error("simplex returned an assignment that violates the system");
}

}  // namespace

FeasibilityResult solve_feasibility(const LinearSystem& sys, const SolverOptions& opts) {
  FeasibilityResult out;
  StandardForm sf = standardize(sys);
  if (sf.trivially_infeasible) return out;
  Tableau t = make_tableau(sf);
  auto ok = t.phase_one(opts.pivot_limit);
  out.pivots = t.pivots();
  if (!ok) {
    out.verdict = Feasibility::Aborted;
    return out;
  }
  if (!*ok) return out;
  out.verdict = Feasibility::Feasible;
  out.assignment = recover(sf, t.solution());
  verify(sys, out.assignment);
  return out;
}

VertexEnumeration enumerate_vertices(const LinearSystem& sys, std::size_t max_vertices, std::uint64_t seed,
                                     std::size_t max_attempts, const SolverOptions& opts) {
  VertexEnumeration out;
  if (max_attempts == 0) max_attempts = 20 * max_vertices + 20;
  StandardForm sf = standardize(sys);
  if (sf.trivially_infeasible) return out;
  Tableau start = make_tableau(sf);
  auto ok = start.phase_one(opts.pivot_limit);
  if (!ok) {
    out.verdict = Feasibility::Aborted;
    return out;
  }
  if (!*ok) return out;
  out.verdict = Feasibility::Feasible;

  std::set<std::vector<Rational>> seen;
  auto keep = [&](std::vector<Rational> x) {
    verify(sys, x);
    if (seen.insert(x).second) out.vertices.push_back(std::move(x));
  };
  keep(recover(sf, start.solution()));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-1000, 1000);
  while (out.vertices.size() < max_vertices && out.attempts < max_attempts) {
    ++out.attempts;
    std::vector<Rational> cost(sf.columns);
    // Objective on classes, mirrored onto the split negative parts.
    for (std::size_t k = 0; k < sf.pos_col.size(); ++k) {
      cost[sf.pos_col[k]] = coef(rng);
      if (sf.neg_col[k] >= 0) cost[static_cast<std::size_t>(sf.neg_col[k])] = -cost[sf.pos_col[k]];
    }
    Tableau t = start;
    if (t.optimize(cost, opts.pivot_limit) != Tableau::Outcome::Optimal) continue;
    keep(recover(sf, t.solution()));
  }
  return out;
}

}  // namespace extlab
