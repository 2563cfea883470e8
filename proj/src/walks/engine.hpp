#pragma once

// Shared depth-first search engine for walk enumeration and canonical-class
// counting. Positions are packed into one 128-bit key (a fixed-width biased
// field per axis) so a step is a single add and the occupancy test is one
// hash probe.

#include <atomic>
#include <cstdint>
#include <vector>

#include "ddseries/walks/census.hpp"
#include "ddseries/walks/model.hpp"

namespace ddseries::walks::detail {

using Key = unsigned __int128;

struct Layout {
  int dim = 0;
  int bits = 0;
  Key origin = 0;
  std::vector<Key> unit;  // unit[axis]
};

Layout make_layout(int dim, int n_max);

// Linear-probing set with LIFO removal: erasing the most recent insertion by
// clearing its slot keeps every older probe chain intact. Key 0 marks an
// empty slot; biased coordinates are never all zero.
class OccupancySet {
 public:
  explicit OccupancySet(int max_entries);
  // Returns the slot used, or -1 if the key is already present.
  int insert(Key key);
  void erase_slot(int slot) { slots_[static_cast<std::size_t>(slot)] = 0; }
  void clear();

 private:
  std::size_t home(Key key) const;
  std::vector<Key> slots_;
  std::size_t mask_;
};

struct SearchSpec {
  WalkModel model;
  int dim = 0;       // lattice dimension (ambient dimension for canonical search)
  int n_max = 0;
  bool canonical = false;
};

// Tally of nodes by (length, dimensionality); for free search only D = 0 is used.
struct Tally {
  int n_max = 0;
  int dims = 0;
  std::vector<std::uint64_t> counts;  // counts[n * (dims + 1) + D]

  Tally(int n_max_, int dims_)
      : n_max(n_max_), dims(dims_), counts(static_cast<std::size_t>((n_max_ + 1) * (dims_ + 1)), 0) {}
  std::uint64_t& at(int n, int dim) { return counts[static_cast<std::size_t>(n * (dims + 1) + dim)]; }
  std::uint64_t at(int n, int dim) const { return counts[static_cast<std::size_t>(n * (dims + 1) + dim)]; }
  std::uint64_t total() const;
};

struct SearchOutcome {
  Tally tally;
  bool aborted = false;
};

// Runs the search to depth spec.n_max (root excluded from the tally). Free
// search pins the first step to +e_1; canonical search only takes steps along
// already used axes or the next new axis in the positive direction.
// Aborts (aborted = true) once node_limit nodes have been visited.
SearchOutcome run_search(const SearchSpec& spec, std::uint64_t node_limit, unsigned workers, int split_depth);

unsigned resolve_workers(unsigned requested);

}  // namespace ddseries::walks::detail
