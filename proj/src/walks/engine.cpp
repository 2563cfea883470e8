#include "engine.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "ddseries/error.hpp"

namespace ddseries::walks::detail {

Layout make_layout(int dim, int n_max) {
  if (dim < 1) throw PreconditionError("lattice dimension must be >= 1");
  int bits = 2;
  while ((1 << (bits - 1)) <= n_max) ++bits;
  if (dim * bits > 128) {
    throw PreconditionError("dimension " + std::to_string(dim) + " with walk length " + std::to_string(n_max) +
                            " does not fit the 128-bit coordinate key");
  }
  Layout layout;
  layout.dim = dim;
  layout.bits = bits;
  const Key bias = Key{1} << (bits - 1);
  for (int axis = 0; axis < dim; ++axis) {
    const Key unit = Key{1} << (axis * bits);
    layout.unit.push_back(unit);
    layout.origin += bias * unit;
  }
  return layout;
}

OccupancySet::OccupancySet(int max_entries) {
  std::size_t capacity = 16;
  while (capacity < static_cast<std::size_t>(4 * (max_entries + 1))) capacity <<= 1;
  slots_.assign(capacity, 0);
  mask_ = capacity - 1;
}

std::size_t OccupancySet::home(Key key) const {
  const auto lo = static_cast<std::uint64_t>(key);
  const auto hi = static_cast<std::uint64_t>(key >> 64);
  const std::uint64_t mixed = (lo ^ (hi * 0x9E3779B97F4A7C15ULL)) * 0xBF58476D1CE4E5B9ULL;
  return static_cast<std::size_t>(mixed >> 32) & mask_;
}

int OccupancySet::insert(Key key) {
  std::size_t i = home(key);
  while (slots_[i] != 0) {
    if (slots_[i] == key) return -1;
    i = (i + 1) & mask_;
  }
  slots_[i] = key;
  return static_cast<int>(i);
}

void OccupancySet::clear() { std::fill(slots_.begin(), slots_.end(), Key{0}); }

std::uint64_t Tally::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

constexpr std::uint64_t kFlushEvery = 1u << 14;

class Walker {
 public:
  Walker(const SearchSpec& spec, const Layout& layout, std::atomic<std::uint64_t>& shared_nodes,
         std::uint64_t node_limit)
      : spec_(spec),
        layout_(layout),
        set_(spec.n_max),
        tally_(spec.n_max, spec.canonical ? spec.dim : 0),
        shared_nodes_(shared_nodes),
        node_limit_(node_limit) {
    path_.reserve(static_cast<std::size_t>(spec.n_max) + 1);
    slots_.reserve(static_cast<std::size_t>(spec.n_max) + 1);
    new_axis_.reserve(static_cast<std::size_t>(spec.n_max) + 1);
    reset();
  }

  void reset() {
    if (spec_.model.kind == ModelKind::Saw) set_.clear();
    path_.assign(1, layout_.origin);
    slots_.clear();
    new_axis_.clear();
    used_axes_ = 0;
    if (spec_.model.kind == ModelKind::Saw) slots_.push_back(set_.insert(layout_.origin));
  }

  int length() const { return static_cast<int>(path_.size()) - 1; }
  int used_axes() const { return used_axes_; }
  bool aborted() const { return aborted_; }
  Tally& tally() { return tally_; }

  // Direction encoding: 2*axis for +e_axis, 2*axis + 1 for -e_axis.
  bool push(int direction) {
    const int axis = direction >> 1;
    const Key unit = layout_.unit[static_cast<std::size_t>(axis)];
    const Key next = (direction & 1) ? path_.back() - unit : path_.back() + unit;
    switch (spec_.model.kind) {
      case ModelKind::Saw: {
        const int slot = set_.insert(next);
        if (slot < 0) return false;
        slots_.push_back(slot);
        break;
      }
      case ModelKind::Memory: {
        // new site must differ from the previous tau sites
        const int n = static_cast<int>(path_.size());
        const int lo = std::max(0, n - spec_.model.tau);
        for (int i = n - 1; i >= lo; --i) {
          if (path_[static_cast<std::size_t>(i)] == next) return false;
        }
        break;
      }
      case ModelKind::Simple:
        break;
    }
    path_.push_back(next);
    const bool fresh = spec_.canonical && axis == used_axes_;
    new_axis_.push_back(fresh);
    if (fresh) ++used_axes_;
    return true;
  }

  void pop() {
    path_.pop_back();
    if (spec_.model.kind == ModelKind::Saw) {
      set_.erase_slot(slots_.back());
      slots_.pop_back();
    }
    if (new_axis_.back()) --used_axes_;
    new_axis_.pop_back();
  }

  void record() {
    ++tally_.at(length(), spec_.canonical ? used_axes_ : 0);
    if (++pending_ == kFlushEvery) flush();
  }

  void flush() {
    const auto total = shared_nodes_.fetch_add(pending_, std::memory_order_relaxed) + pending_;
    pending_ = 0;
    if (total > node_limit_) aborted_ = true;
  }

  template <class Fn>
  void for_each_direction(Fn&& fn) {
    if (spec_.canonical) {
      for (int axis = 0; axis < used_axes_; ++axis) {
        fn(2 * axis);
        fn(2 * axis + 1);
      }
      if (used_axes_ < spec_.dim) fn(2 * used_axes_);
    } else if (length() == 0) {
      fn(0);
    } else {
      for (int dir = 0; dir < 2 * spec_.dim; ++dir) fn(dir);
    }
  }

  void dfs() {
    if (aborted_) return;
    record();
    if (length() == spec_.n_max) return;
    for_each_direction([&](int dir) {
      if (aborted_) return;
      if (push(dir)) {
        dfs();
        pop();
      }
    });
  }

 private:
  const SearchSpec& spec_;
  const Layout& layout_;
  OccupancySet set_;
  Tally tally_;
  std::vector<Key> path_;
  std::vector<int> slots_;
  std::vector<bool> new_axis_;
  int used_axes_ = 0;
  std::atomic<std::uint64_t>& shared_nodes_;
  std::uint64_t node_limit_;
  std::uint64_t pending_ = 0;
  bool aborted_ = false;
};

// Collect every valid prefix of exactly `depth` steps; nodes shallower than
// `depth` are tallied by the collecting walker itself.
void collect_prefixes(Walker& walker, int depth, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (walker.length() == depth) {
    out.push_back(current);
    return;
  }
  walker.record();
  walker.for_each_direction([&](int dir) {
    if (walker.push(dir)) {
      current.push_back(dir);
      collect_prefixes(walker, depth, current, out);
      current.pop_back();
      walker.pop();
    }
  });
}

}  // namespace

SearchOutcome run_search(const SearchSpec& spec, std::uint64_t node_limit, unsigned workers, int split_depth) {
  if (spec.n_max < 0) throw PreconditionError("walk length must be non-negative");
  const Layout layout = make_layout(spec.dim, std::max(spec.n_max, 1));
  std::atomic<std::uint64_t> nodes{0};

  Walker master(spec, layout, nodes, node_limit);
  std::vector<std::vector<int>> prefixes;
  std::vector<int> current;
  const int depth = std::clamp(split_depth, 0, spec.n_max);
  collect_prefixes(master, depth, current, prefixes);
  master.flush();

  SearchOutcome outcome{master.tally(), master.aborted()};
  if (outcome.aborted) return outcome;

  const unsigned n_workers = std::min<unsigned>(resolve_workers(workers), std::max<std::size_t>(prefixes.size(), 1));
  std::atomic<std::size_t> next_job{0};
  std::vector<Tally> tallies(n_workers, Tally(spec.n_max, spec.canonical ? spec.dim : 0));
  std::vector<char> aborted(n_workers, 0);

  auto work = [&](unsigned id) {
    Walker walker(spec, layout, nodes, node_limit);
    for (;;) {
      const std::size_t job = next_job.fetch_add(1);
      if (job >= prefixes.size() || walker.aborted()) break;
      walker.reset();
      for (int dir : prefixes[job]) walker.push(dir);
      walker.dfs();
    }
    walker.flush();
    tallies[id] = walker.tally();
    aborted[id] = walker.aborted();
  };

  if (n_workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < n_workers; ++id) threads.emplace_back(work, id);
    for (auto& t : threads) t.join();
  }
  // Deterministic aggregation: fixed worker order, exact integer sums.
  for (unsigned id = 0; id < n_workers; ++id) {
    for (std::size_t i = 0; i < outcome.tally.counts.size(); ++i) outcome.tally.counts[i] += tallies[id].counts[i];
    outcome.aborted = outcome.aborted || aborted[id];
  }
  return outcome;
}

}  // namespace ddseries::walks::detail
