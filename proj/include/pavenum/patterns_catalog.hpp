#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pavenum/perm_core.hpp"

namespace pav {

// The k-indexed pattern families. Each generator(k) has length k+1 and is
// contained in generator(k+1), so the classes below grow monotonically
// toward S(123) as k increases. k below the stated minimum throws
// std::domain_error.
Pattern family_r(int k);  // k >= 2:  k (k-1) ... 2 1 (k+1)         r_2 = 213
Pattern family_q(int k);  // k >= 2:  1 (k+1) k ... 2               q_2 = 132
Pattern family_p(int k);  // k >= 2:  (k-1) ... 2 1 (k+1) k         p_2 = 132
Pattern family_s(int k);  // k >= 3:  2 1 (k+1) k (k-1) ... 4 3     s_3 = 2143
Pattern family_w(int k);  // k >= 3:  k (k-1) ... 2 1 (k+1)         w_3 = 3214

struct PatternFamily {
  std::string name;  // "r", "q", "p", "s", "w"
  int k_min = 2;
  std::function<Pattern(int)> generator;
};

const std::vector<PatternFamily>& pattern_families();

// One named class of the catalog. Parametric entries take a k in
// [k_min, k_max]; fixed entries ignore k. rule_id / gf_id are empty when the
// class has no attached succession rule or closed-form series.
struct ClassCatalogEntry {
  std::string id;
  bool parametric = false;
  int k_min = 0;
  int k_max = 0;  // patterns are kept to length <= 9, hence k <= 8
  std::function<AvoidanceClass(int)> builder;  // argument ignored when fixed
  std::string sequence_name;
  std::string gf_id;
  std::string rule_id;
};

// All catalog entries, fixed order (the lattice from Fibonacci to Catalan).
const std::vector<ClassCatalogEntry>& catalog();

// Entry lookup; throws std::invalid_argument for an unknown id.
const ClassCatalogEntry& catalog_entry(const std::string& id);

// Build a class by id, validating k against the entry (std::domain_error
// when k is missing/out of range for a parametric entry or supplied for a
// fixed one).
AvoidanceClass make_class(const std::string& id, std::optional<int> k = std::nullopt);

// TSV serialization: header + one row per (id, admissible k) with the basis
// in one-line form and the expected sequence name.
std::string catalog_tsv();

}  // namespace pav
