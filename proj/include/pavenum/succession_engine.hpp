#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pavenum/checked_int.hpp"
#include "pavenum/enumeration.hpp"
#include "pavenum/perm_core.hpp"

namespace pav {

// A succession-rule label. Most rules use plain integer labels (k); a few
// need a decorated family like (2_j), hence the optional subscript.
struct Label {
  int value = 0;
  std::optional<int> subscript;

  friend auto operator<=>(const Label&, const Label&) = default;
  std::string str() const;  // "(2)" or "(2_1)"
};

// Axiom + production map. produce(L) must return exactly L.value sons for
// every label the rule can reach; the engine checks this invariant.
struct SuccessionRule {
  std::string id;
  std::string description;
  Label axiom;
  std::function<std::vector<Label>(const Label&)> produce;

  // Human-readable production lines in bracket notation, for `show-rule`.
  std::vector<std::string> display_lines;
};

// The named rules of the catalog. Throws std::domain_error for a k outside
// the rule's admissible range.
SuccessionRule rscat_rule();
SuccessionRule rsfibo_rule();
SuccessionRule rs2fin_rule();
SuccessionRule pow2_rule();
SuccessionRule gfib_rule(int k);    // k >= 2
SuccessionRule gfib2_rule(int k);   // k >= 2
SuccessionRule cat1_rule(int k);    // k >= 2
SuccessionRule omega_rule(int k);   // k >= 3
SuccessionRule direct_rule(int k);  // k >= 2
SuccessionRule evf1_rule(int k);    // k >= 3
SuccessionRule evf2_rule(int k);    // k >= 3

// Lookup by id string ("rsfibo", "gfib", ...). Parametric rules take k from
// the argument or from an id suffix "name:k" (e.g. "direct:3"); supplying
// neither, or k out of range, throws.
SuccessionRule rule_by_id(const std::string& id, std::optional<int> k = std::nullopt);

// Label multiset at one generation of the rule's tree.
using LabelDistribution = std::map<Label, CheckedInt>;

// Distributions for generations 0..n_max (generation 0 = {axiom: 1}).
// Verifies |produce(L)| == L.value at every expansion and throws
// std::logic_error if a rule breaks its own arity contract.
std::vector<LabelDistribution> label_dynamics(const SuccessionRule& rule, int n_max);

// Node counts per generation: the total multiplicity at each level.
CountSeries level_counts(const SuccessionRule& rule, int n_max);

// Side-by-side comparison of a rule's label dynamics against the concrete
// ECO tree of an avoidance class. A permutation corresponds to the label
// value = its number of active sites, so the comparison collapses label
// subscripts.
struct VerifyLevel {
  int n = 0;
  CheckedInt rule_count;
  CheckedInt eco_count;
  std::map<int, CheckedInt> rule_value_dist;  // label value -> multiplicity
  std::map<int, CheckedInt> eco_value_dist;   // #active sites -> multiplicity
  bool counts_equal = false;
  bool labels_equal = false;
};

struct VerifyReport {
  std::vector<VerifyLevel> levels;
  bool all_equal() const;
};

VerifyReport verify_rule_against_eco(const SuccessionRule& rule, const AvoidanceClass& cls,
                                     int n_max, const EnumerationLimits& limits = {});

}  // namespace pav
