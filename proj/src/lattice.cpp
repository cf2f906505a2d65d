#include "extlab/lattice.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace extlab {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
}

Coord floor_mod(Coord a, Coord p) {
  Coord r = a % p;
  return r < 0 ? r + p : r;
}

}  // namespace

LatticePoint LatticePoint::unit(std::size_t dim, std::size_t axis) {
  LatticePoint p = zero(dim);
  p.c_.at(axis) = 1;
  return p;
}

bool LatticePoint::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Coord x) { return x == 0; });
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a.dim(), b.dim(), "point addition");
  LatticePoint r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r.c_[i] += b.c_[i];
  return r;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a.dim(), b.dim(), "point subtraction");
  LatticePoint r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

LatticePoint operator-(const LatticePoint& a) {
  LatticePoint r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Domain::Domain(std::size_t dim, std::vector<LatticePoint> points) : dim_(dim), pts_(std::move(points)) {
  if (dim_ == 0) throw std::invalid_argument("domain dimension must be at least 1");
  for (const auto& p : pts_) require_same_dim(p.dim(), dim_, "domain");
  std::sort(pts_.begin(), pts_.end());
  if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
    throw std::invalid_argument("domain has duplicate points");
}

Domain Domain::interval(Coord lo, Coord hi) {
  std::vector<LatticePoint> pts;
  for (Coord x = lo; x <= hi; ++x) pts.push_back(LatticePoint{x});
  return Domain(1, std::move(pts));
}

Domain Domain::box(const LatticePoint& lo, const LatticePoint& hi) {
  require_same_dim(lo.dim(), hi.dim(), "box");
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < lo.dim(); ++i)
    if (hi[i] < lo[i]) return Domain(lo.dim(), {});
  LatticePoint cur = lo;
  while (true) {
    pts.push_back(cur);
    std::size_t i = lo.dim();
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return Domain(lo.dim(), std::move(pts));
    }
  }
}

bool Domain::contains(const LatticePoint& p) const { return std::binary_search(pts_.begin(), pts_.end(), p); }

std::optional<std::size_t> Domain::index_of(const LatticePoint& p) const {
  auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
  if (it == pts_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - pts_.begin());
}

bool Domain::is_subset_of(const Domain& other) const {
  if (dim_ != other.dim_ && !pts_.empty()) return false;
  return std::includes(other.pts_.begin(), other.pts_.end(), pts_.begin(), pts_.end());
}

std::vector<std::size_t> Domain::positions_in(const Domain& super) const {
  std::vector<std::size_t> pos;
  pos.reserve(pts_.size());
  for (const auto& p : pts_) {
    auto i = super.index_of(p);
    if (!i) throw std::invalid_argument("point " + to_string(p) + " is not in the enclosing domain");
    pos.push_back(*i);
  }
  return pos;
}

Domain Domain::unite(const Domain& other) const {
  require_same_dim(dim_, other.dim_, "domain union");
  std::vector<LatticePoint> out;
  std::set_union(pts_.begin(), pts_.end(), other.pts_.begin(), other.pts_.end(), std::back_inserter(out));
  return Domain(dim_, std::move(out));
}

Domain Domain::intersect(const Domain& other) const {
  require_same_dim(dim_, other.dim_, "domain intersection");
  std::vector<LatticePoint> out;
  std::set_intersection(pts_.begin(), pts_.end(), other.pts_.begin(), other.pts_.end(),
                        std::back_inserter(out));
  return Domain(dim_, std::move(out));
}

std::pair<LatticePoint, LatticePoint> Domain::bounding_box() const {
  if (pts_.empty()) throw std::invalid_argument("bounding box of an empty domain");
  LatticePoint lo = pts_.front(), hi = pts_.front();
  for (const auto& p : pts_)
    for (std::size_t i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  return {lo, hi};
}

bool Domain::is_box() const {
  if (pts_.empty()) return false;
  auto [lo, hi] = bounding_box();
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim_; ++i) n *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
  return n == pts_.size();
}

bool Domain::is_interval() const { return dim_ == 1 && is_box(); }

std::string to_string(const Domain& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += to_string(d[i]);
  }
  return s + "}";
}

Domain shift_domain(const Domain& u, const LatticePoint& k) {
  require_same_dim(u.dim(), k.dim(), "shift_domain");
  std::vector<LatticePoint> pts;
  pts.reserve(u.size());
  for (const auto& p : u) pts.push_back(p + k);
  return Domain(u.dim(), std::move(pts));
}

std::vector<LatticePoint> translates_inside(const Domain& v, const Domain& w) {
  require_same_dim(v.dim(), w.dim(), "translates_inside");
  std::vector<LatticePoint> out;
  if (v.empty()) return out;  // the empty set fits everywhere; callers never ask
  for (const auto& target : w) {
    LatticePoint k = target - v[0];
    bool fits = true;
    for (const auto& p : v)
      if (!w.contains(p + k)) {
        fits = false;
        break;
      }
    if (fits) out.push_back(k);
  }
  return out;  // w is sorted and k = target - v[0] is monotone in target
}

std::vector<LatticePoint> overlap_shifts(const Domain& u) {
  std::vector<LatticePoint> out;
  LatticePoint zero = LatticePoint::zero(u.dim());
  for (const auto& a : u)
    for (const auto& b : u) {
      LatticePoint k = b - a;
      if (k > zero) out.push_back(k);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PeriodVector::PeriodVector(std::vector<Coord> periods) : p_(std::move(periods)) {
  if (p_.empty()) throw std::invalid_argument("period vector must be nonempty");
  for (Coord x : p_)
    if (x < 1) throw std::invalid_argument("periods must be positive");
}

FiniteModule::FiniteModule(PeriodVector periods) : p_(std::move(periods)), card_(1) {
  for (Coord x : p_.periods()) {
    if (card_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(x))
      throw std::invalid_argument("module too large");
    card_ *= static_cast<std::uint64_t>(x);
  }
}

Domain FiniteModule::cells() const {
  LatticePoint lo = LatticePoint::zero(dim()), hi = LatticePoint::zero(dim());
  for (std::size_t i = 0; i < dim(); ++i) hi[i] = p_[i] - 1;
  return Domain::box(lo, hi);
}

LatticePoint FiniteModule::reduce(const LatticePoint& p) const {
  require_same_dim(p.dim(), dim(), "quotient map");
  LatticePoint r = p;
  for (std::size_t i = 0; i < dim(); ++i) r[i] = floor_mod(p[i], p_[i]);
  return r;
}

std::uint64_t FiniteModule::index_of(const LatticePoint& p) const {
  require_same_dim(p.dim(), dim(), "module index");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    idx = idx * static_cast<std::uint64_t>(p_[i]) + static_cast<std::uint64_t>(floor_mod(p[i], p_[i]));
  return idx;
}

LatticePoint FiniteModule::element_at(std::uint64_t index) const {
  LatticePoint r = LatticePoint::zero(dim());
  for (std::size_t i = dim(); i-- > 0;) {
    r[i] = static_cast<Coord>(index % static_cast<std::uint64_t>(p_[i]));
    index /= static_cast<std::uint64_t>(p_[i]);
  }
  return r;
}

LatticePoint quotient_map(const FiniteModule& m, const LatticePoint& p) { return m.reduce(p); }

Envelope envelope_for(const Domain& u) {
  if (u.empty()) throw std::invalid_argument("envelope_for: empty domain");
  auto [lo, hi] = u.bounding_box();
  std::vector<Coord> periods(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) periods[i] = 2 * (hi[i] - lo[i] + 1);
  return Envelope{FiniteModule(PeriodVector(std::move(periods)))};
}

bool is_injective_mod(const FiniteModule& m, const Domain& u) {
  std::vector<std::uint64_t> img;
  for (const auto& p : u) img.push_back(m.index_of(p));
  std::sort(img.begin(), img.end());
  return std::adjacent_find(img.begin(), img.end()) == img.end();
}

// E2 asks, for V in U and a module translation g~ with g~ + phi(V) in phi(U),
// for an integer g with g + V in U and phi(g + v) = g~ + phi(v). Because phi
// is injective on U, g + v is forced to be the unique u with
// phi(u) = g~ + phi(v), so a lift exists iff t(v) - v is the same vector for
// every v in V. Hence E2 fails for some V iff it fails for a pair, and checking
// all pairs is the exhaustive check.
EnvelopeCheck verify_envelope(const Envelope& e, const Domain& u, std::optional<std::size_t> subset_cap) {
  const FiniteModule& m = e.module;
  require_same_dim(u.dim(), m.dim(), "verify_envelope");
  EnvelopeCheck out;
  out.subset_cap = subset_cap.value_or(u.size());

  std::map<std::uint64_t, std::size_t> preimage;
  std::vector<std::uint64_t> phi(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    phi[i] = m.index_of(u[i]);
    auto [it, fresh] = preimage.emplace(phi[i], i);
    if (!fresh) {
      out.status = EnvelopeCheck::Status::Fail;
      out.failure = EnvelopeCheck::Failure::NotInjective;
      out.witness_subset = Domain(u.dim(), {u[it->second], u[i]});
      return out;
    }
  }

  if (out.subset_cap < 2 && u.size() >= 2) {
    out.status = EnvelopeCheck::Status::Partial;
    return out;
  }

  std::vector<LatticePoint> images(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) images[i] = m.element_at(phi[i]);

  // For each g~, offset[i] = t(u_i) - u_i when g~ + phi(u_i) lands in phi(U).
  std::vector<std::optional<LatticePoint>> offset(u.size());
  std::optional<std::pair<std::size_t, std::size_t>> best_pair;
  LatticePoint best_g;
  for (std::uint64_t gi = 0; gi < m.cardinality(); ++gi) {
    LatticePoint g = m.element_at(gi);
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto it = preimage.find(m.index_of(images[i] + g));
      offset[i] = it == preimage.end() ? std::nullopt : std::optional<LatticePoint>(u[it->second] - u[i]);
    }
    // Lexicographically first failing pair for this g~.
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!offset[i]) continue;
      if (best_pair && i > best_pair->first) break;
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        if (!offset[j] || *offset[j] == *offset[i]) continue;
        if (!best_pair || std::make_pair(i, j) < *best_pair) {
          best_pair = std::make_pair(i, j);
          best_g = g;
        }
        break;
      }
    }
  }
  if (best_pair) {
    out.status = EnvelopeCheck::Status::Fail;
    out.failure = EnvelopeCheck::Failure::NoIntegerShift;
    out.witness_subset = Domain(u.dim(), {u[best_pair->first], u[best_pair->second]});
    out.witness_shift = best_g;
  }
  return out;
}

}  // namespace extlab
