#include "pavenum/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <numeric>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pav {

namespace {

int thread_count() {
#ifdef _OPENMP
  return std::max(1, omp_get_max_threads());
#else
  return 1;
#endif
}

[[noreturn]] void throw_node_cap(std::uint64_t cap) {
  throw CapExceeded("generating-tree node cap of " + std::to_string(cap) +
                    " exceeded; raise the node cap to go deeper");
}

// Active sites of a raw value sequence, written into `sites`. Same contract
// as active_sites() but allocation-light for the hot loops; assumes the
// parent is already known to be in the class.
void raw_active_sites(const std::vector<int>& perm, const AvoidanceClass& cls,
                      std::vector<int>& child, std::vector<int>& sites) {
  int n = static_cast<int>(perm.size());
  sites.clear();
  child.resize(static_cast<size_t>(n) + 1);
  for (int site = 1; site <= n + 1; ++site) {
    size_t w = 0;
    for (int pos = 1; pos <= n + 1; ++pos) {
      if (pos == site) child[w++] = n + 1;
      if (pos <= n) child[w++] = perm[static_cast<size_t>(pos - 1)];
    }
    if (avoids_all(std::span<const int>(child), cls)) sites.push_back(site);
  }
}

std::vector<int> child_of(const std::vector<int>& perm, int site) {
  int n = static_cast<int>(perm.size());
  std::vector<int> child(static_cast<size_t>(n) + 1);
  size_t w = 0;
  for (int pos = 1; pos <= n + 1; ++pos) {
    if (pos == site) child[w++] = n + 1;
    if (pos <= n) child[w++] = perm[static_cast<size_t>(pos - 1)];
  }
  return child;
}

void check_n_max(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
}

}  // namespace

std::vector<std::vector<Permutation>> eco_levels(const AvoidanceClass& cls, int n_max,
                                                 const EnumerationLimits& limits) {
  check_n_max(n_max);
  std::vector<std::vector<Permutation>> levels;
  levels.reserve(static_cast<size_t>(n_max) + 1);
  levels.push_back({Permutation()});
  std::uint64_t nodes = 1;

  for (int n = 0; n < n_max; ++n) {
    const std::vector<Permutation>& parents = levels.back();
    int np = static_cast<int>(parents.size());
    std::vector<std::vector<int>> sites(static_cast<size_t>(np));

    std::exception_ptr error;
#pragma omp parallel
    {
      std::vector<int> scratch;
      std::vector<int> my_sites;
#pragma omp for schedule(dynamic, 64)
      for (int i = 0; i < np; ++i) {
        try {
          raw_active_sites(parents[static_cast<size_t>(i)].values(), cls, scratch, my_sites);
          sites[static_cast<size_t>(i)] = my_sites;
        } catch (...) {
#pragma omp critical
          if (!error) error = std::current_exception();
        }
      }
    }
    if (error) std::rethrow_exception(error);

    std::vector<size_t> offsets(static_cast<size_t>(np) + 1, 0);
    for (int i = 0; i < np; ++i)
      offsets[static_cast<size_t>(i) + 1] = offsets[static_cast<size_t>(i)] + sites[static_cast<size_t>(i)].size();
    size_t total = offsets.back();
    if (nodes + total > limits.node_cap) throw_node_cap(limits.node_cap);
    nodes += total;

    std::vector<Permutation> next(total);
#pragma omp parallel for schedule(dynamic, 64)
    for (int i = 0; i < np; ++i) {
      const std::vector<int>& parent = parents[static_cast<size_t>(i)].values();
      const std::vector<int>& s = sites[static_cast<size_t>(i)];
      for (size_t j = 0; j < s.size(); ++j)
        next[offsets[static_cast<size_t>(i)] + j] = Permutation(child_of(parent, s[j]));
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

namespace {

// Depth-first count of the subtree below `perm` (exclusive), tallying into
// counts[level]. `budget` style: the caller maintains the visit counter.
void dfs_count(const std::vector<int>& perm, int level, int n_max, const AvoidanceClass& cls,
               std::vector<std::uint64_t>& counts, std::uint64_t& local_visits,
               std::atomic<std::uint64_t>& shared_visits, std::atomic<bool>& stop,
               std::uint64_t node_cap) {
  if (level >= n_max) return;
  if (stop.load(std::memory_order_relaxed)) return;
  std::vector<int> scratch;
  std::vector<int> sites;
  raw_active_sites(perm, cls, scratch, sites);
  for (int s : sites) {
    std::vector<int> child = child_of(perm, s);
    counts[static_cast<size_t>(level) + 1] += 1;
    if (++local_visits >= 1024) {
      if (shared_visits.fetch_add(local_visits, std::memory_order_relaxed) + local_visits > node_cap)
        stop.store(true, std::memory_order_relaxed);
      local_visits = 0;
    }
    dfs_count(child, level + 1, n_max, cls, counts, local_visits, shared_visits, stop, node_cap);
    if (stop.load(std::memory_order_relaxed)) return;
  }
}

}  // namespace

CountSeries eco_counts_serial(const AvoidanceClass& cls, int n_max, const EnumerationLimits& limits) {
  check_n_max(n_max);
  std::vector<std::uint64_t> counts(static_cast<size_t>(n_max) + 1, 0);
  counts[0] = 1;
  std::uint64_t visits = 1;
  std::atomic<std::uint64_t> shared{0};
  std::atomic<bool> stop{false};
  dfs_count({}, 0, n_max, cls, counts, visits, shared, stop, limits.node_cap);
  shared.fetch_add(visits);
  if (stop.load() || shared.load() > limits.node_cap) throw_node_cap(limits.node_cap);
  CountSeries out(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) out[i] = CheckedInt(static_cast<long long>(counts[i]));
  return out;
}

CountSeries eco_counts(const AvoidanceClass& cls, int n_max, const EnumerationLimits& limits) {
  check_n_max(n_max);

  // Grow a stored frontier until there is enough width to share out.
  int want = std::max(64, 8 * thread_count());
  std::vector<std::vector<int>> frontier = {{}};
  std::vector<std::uint64_t> counts(static_cast<size_t>(n_max) + 1, 0);
  counts[0] = 1;
  std::uint64_t visited = 1;
  int level = 0;
  std::vector<int> scratch;
  std::vector<int> sites;
  while (level < n_max && static_cast<int>(frontier.size()) < want) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& p : frontier) {
      raw_active_sites(p, cls, scratch, sites);
      for (int s : sites) next.push_back(child_of(p, s));
    }
    ++level;
    counts[static_cast<size_t>(level)] = next.size();
    visited += next.size();
    if (visited > limits.node_cap) throw_node_cap(limits.node_cap);
    frontier = std::move(next);
    if (frontier.empty()) break;  // the class died out; nothing below
  }

  int nf = static_cast<int>(frontier.size());
  int threads = thread_count();
  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<size_t>(threads), std::vector<std::uint64_t>(static_cast<size_t>(n_max) + 1, 0));
  std::atomic<std::uint64_t> shared{visited};
  std::atomic<bool> stop{false};
  std::exception_ptr error;

#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    int tid = omp_get_thread_num();
#else
    int tid = 0;
#endif
    std::uint64_t local_visits = 0;
#pragma omp for schedule(dynamic, 1)
    for (int i = 0; i < nf; ++i) {
      try {
        dfs_count(frontier[static_cast<size_t>(i)], level, n_max, cls, partial[static_cast<size_t>(tid)],
                  local_visits, shared, stop, limits.node_cap);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
        stop.store(true);
      }
    }
    shared.fetch_add(local_visits);
  }
  if (error) std::rethrow_exception(error);
  if (stop.load() || shared.load() > limits.node_cap) throw_node_cap(limits.node_cap);

  for (const auto& p : partial)
    for (size_t i = 0; i <= static_cast<size_t>(n_max); ++i) counts[i] += p[i];
  CountSeries out(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) out[i] = CheckedInt(static_cast<long long>(counts[i]));
  return out;
}

namespace {

constexpr int kHardFactorialLimit = 20;  // 20! still fits in 64 bits

unsigned long long factorial_u64(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

// m-th (0-based) permutation of {1..n} in lexicographic order.
std::vector<int> unrank_permutation(int n, unsigned long long m) {
  std::vector<int> avail(static_cast<size_t>(n));
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    unsigned long long f = factorial_u64(i);
    size_t d = static_cast<size_t>(m / f);
    m %= f;
    out.push_back(avail[d]);
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return out;
}

void check_factorial_cap(int n_max, const EnumerationLimits& limits) {
  check_n_max(n_max);
  int cap = std::min(limits.factorial_cap, kHardFactorialLimit);
  if (n_max > cap)
    throw CapExceeded("brute-force n_max " + std::to_string(n_max) + " exceeds the factorial cap of " +
                      std::to_string(cap));
}

std::uint64_t count_avoiders_of_length(const AvoidanceClass& cls, int n) {
  if (n == 0) return 1;  // patterns are non-empty, so the empty permutation always avoids
  unsigned long long total = factorial_u64(n);
  std::uint64_t count = 0;

#pragma omp parallel reduction(+ : count)
  {
    int threads = 1, tid = 0;
#ifdef _OPENMP
    threads = omp_get_num_threads();
    tid = omp_get_thread_num();
#endif
    unsigned long long lo = static_cast<unsigned long long>(
        static_cast<unsigned __int128>(total) * static_cast<unsigned>(tid) / static_cast<unsigned>(threads));
    unsigned long long hi = static_cast<unsigned long long>(
        static_cast<unsigned __int128>(total) * static_cast<unsigned>(tid + 1) / static_cast<unsigned>(threads));
    if (lo < hi) {
      std::vector<int> perm = unrank_permutation(n, lo);
      for (unsigned long long m = lo; m < hi; ++m) {
        if (avoids_all(std::span<const int>(perm), cls)) ++count;
        std::next_permutation(perm.begin(), perm.end());
      }
    }
  }
  return count;
}

}  // namespace

CountSeries brute_force_counts_serial(const AvoidanceClass& cls, int n_max,
                                      const EnumerationLimits& limits) {
  check_factorial_cap(n_max, limits);
  CountSeries out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t count = 0;
    if (n == 0) {
      count = 1;
    } else {
      std::vector<int> perm(static_cast<size_t>(n));
      std::iota(perm.begin(), perm.end(), 1);
      do {
        if (avoids_all(std::span<const int>(perm), cls)) ++count;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.push_back(CheckedInt(static_cast<long long>(count)));
  }
  return out;
}

CountSeries brute_force_counts(const AvoidanceClass& cls, int n_max, const EnumerationLimits& limits) {
  check_factorial_cap(n_max, limits);
  CountSeries out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    out.push_back(CheckedInt(static_cast<long long>(count_avoiders_of_length(cls, n))));
  return out;
}

std::vector<Permutation> brute_force_level(const AvoidanceClass& cls, int n,
                                           const EnumerationLimits& limits) {
  check_factorial_cap(n, limits);
  std::vector<Permutation> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (avoids_all(std::span<const int>(perm), cls)) out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::map<int, CheckedInt> active_site_distribution(const std::vector<Permutation>& level,
                                                   const AvoidanceClass& cls) {
  std::map<int, CheckedInt> dist;
  for (const Permutation& p : level) {
    int m = static_cast<int>(active_sites(p, cls).size());
    dist[m] += CheckedInt(1);
  }
  return dist;
}

}  // namespace pav
