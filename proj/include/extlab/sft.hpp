#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extlab/lattice.hpp"
#include "extlab/measure.hpp"

namespace extlab {

// Admissible words on a finite domain; the subshift it generates consists of
// configurations whose every translate of `domain` carries one of `words`.
struct WordSet {
  Domain domain;
  int alphabet = 2;
  std::vector<Symbols> words;  // sorted, distinct

  WordSet() = default;
  WordSet(Domain domain, int alphabet, std::vector<Symbols> words);
  bool contains(const Symbols& w) const;
};

WordSet support_of(const SignedMeasure& mu);

struct SearchLimits {
  std::uint64_t node_limit = 200'000'000;
};

// Boxes of side 1..max_side whose lower corner is the lower corner of U's
// bounding box.
std::vector<Domain> box_schedule(const Domain& u, std::size_t max_side);

struct EmptinessResult {
  enum class Verdict { Empty, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<Domain> empty_window;
  std::optional<Domain> largest_window_checked;
  std::string reason;  // set when a limit stopped the search
  std::uint64_t nodes = 0;
};

EmptinessResult sft_emptiness(const WordSet& t, const std::vector<Domain>& windows, const SearchLimits& limits = {});

struct Enumeration {
  bool complete = true;  // false when the node limit or the solution cap was hit
  std::vector<Symbols> configurations;  // in lexicographic order of cell symbols
  std::uint64_t nodes = 0;
};

// Every T-admissible configuration on the window, symbols in window order.
Enumeration enumerate_window_configurations(const WordSet& t, const Domain& window, std::size_t max_solutions,
                                            const SearchLimits& limits = {});

// Every configuration on the torus (cells in module order) all of whose
// translates of U carry a word of T.
Enumeration enumerate_periodic_configurations(const WordSet& t, const PeriodVector& p, std::size_t max_solutions,
                                              const SearchLimits& limits = {});

struct PeriodicSearchResult {
  enum class Status { Found, None, Aborted };
  Status status = Status::None;
  Symbols configuration;  // module cell order
  std::uint64_t nodes = 0;
};

PeriodicSearchResult periodic_config_search(const WordSet& t, const PeriodVector& p, const SearchLimits& limits = {});

// True if every translate of T's domain inside the window (or on the torus
// when `periods` is given) carries a word of T.
bool is_admissible(const WordSet& t, const Domain& window, const Symbols& config);
bool is_periodic_admissible(const WordSet& t, const PeriodVector& p, const Symbols& config);

}  // namespace extlab
