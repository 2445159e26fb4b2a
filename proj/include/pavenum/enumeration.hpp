#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pavenum/checked_int.hpp"
#include "pavenum/perm_core.hpp"

namespace pav {

// Hard resource limits for the enumeration kernels. Exceeding a limit is an
// explicit CapExceeded error, never a silent truncation.
struct EnumerationLimits {
  int factorial_cap = 9;               // max n the brute-force oracle accepts
  std::uint64_t node_cap = 5'000'000;  // max generating-tree nodes visited/stored
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ECO generating tree, stored level by level: levels[n] holds all of
// S_n(cls), each member generated exactly once from its delete-max parent.
// OpenMP-parallel over parents; child order matches the serial construction.
std::vector<std::vector<Permutation>> eco_levels(const AvoidanceClass& cls, int n_max,
                                                 const EnumerationLimits& limits = {});

// Level sizes only. Streams the tree depth-first without storing levels.
CountSeries eco_counts(const AvoidanceClass& cls, int n_max,
                       const EnumerationLimits& limits = {});
// Serial reference implementation, kept for testing the parallel kernel.
CountSeries eco_counts_serial(const AvoidanceClass& cls, int n_max,
                              const EnumerationLimits& limits = {});

// Brute-force oracle: iterates all n! permutations in lexicographic order
// and filters with avoids_all. Independent of the ECO construction.
CountSeries brute_force_counts(const AvoidanceClass& cls, int n_max,
                               const EnumerationLimits& limits = {});
CountSeries brute_force_counts_serial(const AvoidanceClass& cls, int n_max,
                                      const EnumerationLimits& limits = {});

// All of S_n(cls) obtained by filtering, sorted lexicographically.
// Brute-force counterpart of eco_levels for set-level comparisons.
std::vector<Permutation> brute_force_level(const AvoidanceClass& cls, int n,
                                           const EnumerationLimits& limits = {});

// Multiset {number of active sites -> how many permutations of the level
// have that many}.
std::map<int, CheckedInt> active_site_distribution(const std::vector<Permutation>& level,
                                                   const AvoidanceClass& cls);

}  // namespace pav
