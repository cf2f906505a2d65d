#include "extlab/sft.hpp"

#include <algorithm>
#include <stdexcept>

namespace extlab {

WordSet::WordSet(Domain d, int a, std::vector<Symbols> w) : domain(std::move(d)), alphabet(a), words(std::move(w)) {
  if (alphabet < 1) throw std::invalid_argument("word set: alphabet size must be positive");
  for (const auto& x : words) {
    if (x.size() != domain.size()) throw std::invalid_argument("word set: word length differs from domain size");
    for (int s : x)
      if (s < 0 || s >= alphabet) throw std::invalid_argument("word set: symbol out of range");
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

bool WordSet::contains(const Symbols& w) const { return std::binary_search(words.begin(), words.end(), w); }

WordSet support_of(const SignedMeasure& mu) { return WordSet(mu.domain(), mu.alphabet(), support_words(mu)); }

std::vector<Domain> box_schedule(const Domain& u, std::size_t max_side) {
  std::vector<Domain> out;
  LatticePoint lo = u.bounding_box().first;
  for (std::size_t n = 1; n <= max_side; ++n) {
    LatticePoint hi = lo;
    for (std::size_t i = 0; i < hi.dim(); ++i) hi[i] += static_cast<Coord>(n) - 1;
    out.push_back(Domain::box(lo, hi));
  }
  return out;
}

namespace {

// Backtracking over cells in index order. Each constraint is a list of cells
// that must spell a word of T (in T's domain order); the words still
// compatible with the assigned cells are kept as a bitset.
class Search {
 public:
  Search(const WordSet& t, std::size_t cells, std::vector<std::vector<std::size_t>> constraints)
      : t_(t), n_(cells), a_(t.alphabet), cons_(std::move(constraints)), occ_(cells) {
    lanes_ = (t_.words.size() + 63) / 64;
    if (lanes_ == 0) lanes_ = 1;
    const std::size_t k = t_.domain.size();
    masks_.assign(k * static_cast<std::size_t>(a_) * lanes_, 0);
    for (std::size_t w = 0; w < t_.words.size(); ++w)
      for (std::size_t p = 0; p < k; ++p) mask(p, t_.words[w][p])[w / 64] |= std::uint64_t{1} << (w % 64);
    cand_.assign(cons_.size() * lanes_, 0);
    for (std::size_t c = 0; c < cons_.size(); ++c) {
      for (std::size_t w = 0; w < t_.words.size(); ++w) cand_[c * lanes_ + w / 64] |= std::uint64_t{1} << (w % 64);
      for (std::size_t p = 0; p < cons_[c].size(); ++p) occ_[cons_[c][p]].emplace_back(c, p);
    }
    assignment_.assign(n_, 0);
  }

  // Visits complete assignments until `visit` returns true.
  template <class Visit>
  bool run(bool enumerate_free, std::uint64_t node_limit, Visit&& visit) {
    enumerate_free_ = enumerate_free;
    node_limit_ = node_limit;
    aborted_ = false;
    bool stop = false;
    if (t_.words.empty() && !cons_.empty()) return false;
    dfs(0, visit, stop);
    return stop;
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t* mask(std::size_t pos, int sym) {
    return masks_.data() + (pos * static_cast<std::size_t>(a_) + static_cast<std::size_t>(sym)) * lanes_;
  }

  bool assign(std::size_t cell, int sym) {
    const std::size_t mark = trail_.size();
    for (const auto& [c, p] : occ_[cell]) {
      std::uint64_t* cur = cand_.data() + c * lanes_;
      const std::uint64_t* m = mask(p, sym);
      bool any = false;
      for (std::size_t l = 0; l < lanes_; ++l)
        if (cur[l] & m[l]) {
          any = true;
          break;
        }
      if (!any) {
        undo(mark);
        return false;
      }
      trail_.push_back(c);
      for (std::size_t l = 0; l < lanes_; ++l) {
        trail_.push_back(cur[l]);
        cur[l] &= m[l];
      }
    }
    assignment_[cell] = sym;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      std::size_t base = trail_.size() - lanes_ - 1;
      std::uint64_t* cur = cand_.data() + trail_[base] * lanes_;
      for (std::size_t l = 0; l < lanes_; ++l) cur[l] = trail_[base + 1 + l];
      trail_.resize(base);
    }
  }

  template <class Visit>
  void dfs(std::size_t cell, Visit& visit, bool& stop) {
    if (cell == n_) {
      stop = visit(assignment_);
      return;
    }
    const int top = (occ_[cell].empty() && !enumerate_free_) ? 1 : a_;
    for (int s = 0; s < top && !stop && !aborted_; ++s) {
      if (++nodes_ > node_limit_) {
        aborted_ = true;
        return;
      }
      const std::size_t mark = trail_.size();
      if (!assign(cell, s)) continue;
      dfs(cell + 1, visit, stop);
      undo(mark);
    }
  }

  const WordSet& t_;
  std::size_t n_;
  int a_;
  std::vector<std::vector<std::size_t>> cons_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occ_;
  std::size_t lanes_ = 1;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> cand_;
  std::vector<std::uint64_t> trail_;
  Symbols assignment_;
  bool enumerate_free_ = true;
  bool aborted_ = false;
  std::uint64_t node_limit_ = 0;
  std::uint64_t nodes_ = 0;
};

std::vector<std::vector<std::size_t>> window_constraints(const WordSet& t, const Domain& window) {
  if (t.domain.dim() != window.dim()) throw std::invalid_argument("word set and window differ in dimension");
  std::vector<std::vector<std::size_t>> cons;
  for (const auto& k : translates_inside(t.domain, window)) {
    std::vector<std::size_t> cells;
    for (const auto& u : t.domain) cells.push_back(*window.index_of(u + k));
    cons.push_back(std::move(cells));
  }
  return cons;
}

// A cell may appear twice in one constraint when the periods are smaller than
// the domain; the search intersects both masks, which is what periodicity
// demands.
std::vector<std::vector<std::size_t>> torus_constraints(const WordSet& t, const FiniteModule& m) {
  if (t.domain.dim() != m.dim()) throw std::invalid_argument("word set and periods differ in dimension");
  std::vector<std::vector<std::size_t>> cons;
  for (std::uint64_t gi = 0; gi < m.cardinality(); ++gi) {
    LatticePoint g = m.element_at(gi);
    std::vector<std::size_t> cells;
    for (const auto& u : t.domain) cells.push_back(static_cast<std::size_t>(m.index_of(u + g)));
    cons.push_back(std::move(cells));
  }
  return cons;
}

bool satisfies(const WordSet& t, const std::vector<std::vector<std::size_t>>& cons, const Symbols& config) {
  Symbols w(t.domain.size());
  for (const auto& cells : cons) {
    for (std::size_t p = 0; p < cells.size(); ++p) w[p] = config.at(cells[p]);
    if (!t.contains(w)) return false;
  }
  return true;
}

Enumeration collect(Search& s, std::size_t max_solutions, std::uint64_t node_limit) {
  Enumeration out;
  s.run(true, node_limit, [&](const Symbols& cfg) {
    if (out.configurations.size() >= max_solutions) {
      out.complete = false;
      return true;
    }
    out.configurations.push_back(cfg);
    return false;
  });
  if (s.aborted()) out.complete = false;
  out.nodes = s.nodes();
  return out;
}

}  // namespace

bool is_admissible(const WordSet& t, const Domain& window, const Symbols& config) {
  if (config.size() != window.size()) throw std::invalid_argument("configuration size differs from window");
  return satisfies(t, window_constraints(t, window), config);
}

bool is_periodic_admissible(const WordSet& t, const PeriodVector& p, const Symbols& config) {
  FiniteModule m(p);
  if (config.size() != m.cardinality()) throw std::invalid_argument("configuration size differs from torus");
  return satisfies(t, torus_constraints(t, m), config);
}

EmptinessResult sft_emptiness(const WordSet& t, const std::vector<Domain>& windows, const SearchLimits& limits) {
  EmptinessResult out;
  for (const auto& w : windows) {
    Search s(t, w.size(), window_constraints(t, w));
    bool found = s.run(false, limits.node_limit - std::min(limits.node_limit, out.nodes),
                       [](const Symbols&) { return true; });
    out.nodes += s.nodes();
    if (s.aborted()) {
      out.reason = "search node limit reached at window " + to_string(w);
      return out;
    }
    out.largest_window_checked = w;
    if (!found) {
      out.verdict = EmptinessResult::Verdict::Empty;
      out.empty_window = w;
      return out;
    }
  }
  return out;
}

Enumeration enumerate_window_configurations(const WordSet& t, const Domain& window, std::size_t max_solutions,
                                            const SearchLimits& limits) {
  Search s(t, window.size(), window_constraints(t, window));
  return collect(s, max_solutions, limits.node_limit);
}

Enumeration enumerate_periodic_configurations(const WordSet& t, const PeriodVector& p, std::size_t max_solutions,
                                              const SearchLimits& limits) {
  FiniteModule m(p);
  Search s(t, static_cast<std::size_t>(m.cardinality()), torus_constraints(t, m));
  return collect(s, max_solutions, limits.node_limit);
}

PeriodicSearchResult periodic_config_search(const WordSet& t, const PeriodVector& p, const SearchLimits& limits) {
  FiniteModule m(p);
  auto cons = torus_constraints(t, m);
  Search s(t, static_cast<std::size_t>(m.cardinality()), cons);
  PeriodicSearchResult out;
  bool found = s.run(false, limits.node_limit, [&](const Symbols& cfg) {
    out.configuration = cfg;
    return true;
  });
  out.nodes = s.nodes();
  if (found) {
    if (!satisfies(t, cons, out.configuration)) throw std::logic_error("periodic search returned an inadmissible configuration");
    out.status = PeriodicSearchResult::Status::Found;
  } else {
    out.status = s.aborted() ? PeriodicSearchResult::Status::Aborted : PeriodicSearchResult::Status::None;
  }
  return out;
}

}  // namespace extlab
