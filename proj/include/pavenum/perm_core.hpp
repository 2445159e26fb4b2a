#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pav {

// A permutation of {1,...,n}. Positions are 1-indexed in the API: at(i) is
// the value in position i. The empty permutation (n = 0) is valid.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  // Parses the one-line digit form, e.g. "7465312". Digits 1..9 only.
  static Permutation parse(std::string_view text);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  int at(int pos) const { return values_[static_cast<size_t>(pos - 1)]; }
  const std::vector<int>& values() const { return values_; }
  std::span<const int> span() const { return values_; }

  // Digit string for n <= 9, space-separated values beyond.
  std::string str() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> values_;
};

// A pattern is a permutation used as a forbidden configuration.
using Pattern = Permutation;

// A finite basis of forbidden patterns. Patterns are stored sorted (length,
// then lexicographic) and must be distinct and non-empty.
class AvoidanceClass {
 public:
  explicit AvoidanceClass(std::vector<Pattern> basis, std::string name = "",
                          std::optional<int> k = std::nullopt);

  const std::vector<Pattern>& basis() const { return basis_; }
  const std::string& name() const { return name_; }
  std::optional<int> k() const { return k_; }

  // "123,213,1432" -- basis patterns in one-line form.
  std::string basis_str() const;

 private:
  std::vector<Pattern> basis_;
  std::string name_;
  std::optional<int> k_;
};

// True iff some subsequence of perm is order-isomorphic to pat. False
// whenever pat is longer than perm.
bool contains(const Permutation& perm, const Pattern& pat);
bool contains(std::span<const int> perm, std::span<const int> pat);

bool avoids_all(const Permutation& perm, const AvoidanceClass& cls);
bool avoids_all(std::span<const int> perm, const AvoidanceClass& cls);

// Places value n+1 at the gap before position `site` (site n+1 = trailing
// gap). Throws std::out_of_range for an invalid site.
Permutation insert_max(const Permutation& perm, int site);

// The sites s where insert_max(perm, s) stays in the class, in increasing
// order. Requires avoids_all(perm, cls); throws std::invalid_argument
// otherwise.
std::vector<int> active_sites(const Permutation& perm, const AvoidanceClass& cls);

// Value-complemented, position-reversed copy (an involution).
Permutation reverse_complement(const Permutation& perm);

}  // namespace pav
