#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace extlab {

using Coord = std::int64_t;

class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> coords) : c_(std::move(coords)) {}
  LatticePoint(std::initializer_list<Coord> coords) : c_(coords) {}

  static LatticePoint zero(std::size_t dim) { return LatticePoint(std::vector<Coord>(dim, 0)); }
  static LatticePoint unit(std::size_t dim, std::size_t axis);

  std::size_t dim() const { return c_.size(); }
  Coord operator[](std::size_t i) const { return c_[i]; }
  Coord& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Coord>& coords() const { return c_; }
  bool is_zero() const;

  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
  friend LatticePoint operator-(const LatticePoint& a);
  auto operator<=>(const LatticePoint&) const = default;
  bool operator==(const LatticePoint&) const = default;

 private:
  std::vector<Coord> c_;
};

std::string to_string(const LatticePoint& p);

// Finite set of points of one dimension, kept in lexicographic order.
class Domain {
 public:
  Domain() = default;
  Domain(std::size_t dim, std::vector<LatticePoint> points);

  static Domain interval(Coord lo, Coord hi);
  static Domain box(const LatticePoint& lo, const LatticePoint& hi);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const std::vector<LatticePoint>& points() const { return pts_; }
  const LatticePoint& operator[](std::size_t i) const { return pts_[i]; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  bool contains(const LatticePoint& p) const;
  std::optional<std::size_t> index_of(const LatticePoint& p) const;
  bool is_subset_of(const Domain& other) const;
  // Positions of this domain's points inside `super`; throws if not a subset.
  std::vector<std::size_t> positions_in(const Domain& super) const;
  Domain unite(const Domain& other) const;
  Domain intersect(const Domain& other) const;

  // Lower and upper corner of the bounding box. Requires a nonempty domain.
  std::pair<LatticePoint, LatticePoint> bounding_box() const;
  bool is_box() const;
  // True for a 1-D domain of consecutive integers.
  bool is_interval() const;

  bool operator==(const Domain&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LatticePoint> pts_;
};

std::string to_string(const Domain& d);

Domain shift_domain(const Domain& u, const LatticePoint& k);

// All k with V + k contained in W, in lexicographic order.
std::vector<LatticePoint> translates_inside(const Domain& v, const Domain& w);

// Nonzero k, lexicographically positive, such that U and U + k overlap.
std::vector<LatticePoint> overlap_shifts(const Domain& u);

class PeriodVector {
 public:
  PeriodVector() = default;
  explicit PeriodVector(std::vector<Coord> periods);
  PeriodVector(std::initializer_list<Coord> periods) : PeriodVector(std::vector<Coord>(periods)) {}

  std::size_t dim() const { return p_.size(); }
  Coord operator[](std::size_t i) const { return p_[i]; }
  const std::vector<Coord>& periods() const { return p_; }
  bool operator==(const PeriodVector&) const = default;

 private:
  std::vector<Coord> p_;
};

// The torus (Z/P_1) x ... x (Z/P_D). Elements are residue tuples in [0, P_i),
// ordered lexicographically; index_of gives the position in that order.
class FiniteModule {
 public:
  FiniteModule() = default;
  explicit FiniteModule(PeriodVector periods);

  std::size_t dim() const { return p_.dim(); }
  const PeriodVector& periods() const { return p_; }
  std::uint64_t cardinality() const { return card_; }
  Domain cells() const;

  LatticePoint reduce(const LatticePoint& p) const;
  std::uint64_t index_of(const LatticePoint& p) const;  // reduces first
  LatticePoint element_at(std::uint64_t index) const;
  LatticePoint add(const LatticePoint& a, const LatticePoint& b) const { return reduce(a + b); }

  bool operator==(const FiniteModule&) const = default;

 private:
  PeriodVector p_;
  std::uint64_t card_ = 0;
};

LatticePoint quotient_map(const FiniteModule& m, const LatticePoint& p);

struct Envelope {
  FiniteModule module;
};

Envelope envelope_for(const Domain& u);

struct EnvelopeCheck {
  enum class Status { Pass, Fail, Partial };
  enum class Failure { None, NotInjective, NoIntegerShift };
  Status status = Status::Pass;
  Failure failure = Failure::None;
  Domain witness_subset;       // V, or the colliding pair when not injective
  LatticePoint witness_shift;  // the module translation with no integer lift
  std::size_t subset_cap = 0;  // effective bound on |V| that was checked
};

// subset_cap = nullopt checks every subset of U.
EnvelopeCheck verify_envelope(const Envelope& e, const Domain& u,
                              std::optional<std::size_t> subset_cap = 4);

bool is_injective_mod(const FiniteModule& m, const Domain& u);

}  // namespace extlab
