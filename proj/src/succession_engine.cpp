#include "pavenum/succession_engine.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace pav {

std::string Label::str() const {
  std::string s = "(" + std::to_string(value);
  if (subscript) s += "_" + std::to_string(*subscript);
  s += ")";
  return s;
}

namespace {

Label plain(int v) { return Label{v, std::nullopt}; }
Label sub(int v, int j) { return Label{v, j}; }

std::string production_line(const Label& from, const std::vector<Label>& sons) {
  std::string line = from.str() + " -> ";
  for (const Label& s : sons) line += s.str();
  return line;
}

[[noreturn]] void unknown_label(const std::string& rule_id, const Label& l) {
  throw std::logic_error("rule " + rule_id + ": production requested for unreachable label " + l.str());
}

void require_rule_k(const char* id, int k, int k_min) {
  if (k < k_min)
    throw std::domain_error(std::string(id) + ": k must be >= " + std::to_string(k_min) + ", got " +
                            std::to_string(k));
}

// Generates concrete display lines for a rule whose reachable label set is
// finite: breadth-first from the axiom, one line per label.
std::vector<std::string> enumerate_display_lines(const SuccessionRule& rule) {
  std::vector<std::string> lines = {"axiom: " + rule.axiom.str()};
  std::set<Label> seen = {rule.axiom};
  std::deque<Label> queue = {rule.axiom};
  while (!queue.empty()) {
    Label l = queue.front();
    queue.pop_front();
    std::vector<Label> sons = rule.produce(l);
    lines.push_back(production_line(l, sons));
    for (const Label& s : sons)
      if (seen.insert(s).second) queue.push_back(s);
  }
  return lines;
}

SuccessionRule finite_rule(std::string id, std::string description,
                           std::function<std::vector<Label>(const Label&)> produce) {
  SuccessionRule r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.axiom = plain(1);
  r.produce = std::move(produce);
  r.display_lines = enumerate_display_lines(r);
  return r;
}

}  // namespace

SuccessionRule rscat_rule() {
  SuccessionRule r;
  r.id = "rscat";
  r.description = "Catalan rule: every active site stays active and one opens";
  r.axiom = plain(1);
  r.produce = [](const Label& l) {
    std::vector<Label> sons;
    for (int e = 2; e <= l.value + 1; ++e) sons.push_back(plain(e));
    return sons;
  };
  r.display_lines = {"axiom: (1)", "(1) -> (2)", "(h) -> (2)(3)...(h)(h+1)"};
  return r;
}

SuccessionRule rsfibo_rule() {
  return finite_rule("rsfibo", "Fibonacci rule", [](const Label& l) -> std::vector<Label> {
    if (l == plain(1)) return {plain(2)};
    if (l == plain(2)) return {plain(1), plain(2)};
    unknown_label("rsfibo", l);
  });
}

SuccessionRule rs2fin_rule() {
  return finite_rule("rs2fin", "doubling rule (2^(n-1))", [](const Label& l) -> std::vector<Label> {
    if (l == plain(1)) return {plain(2)};
    if (l == plain(2)) return {plain(2), plain(2)};
    unknown_label("rs2fin", l);
  });
}

SuccessionRule pow2_rule() {
  SuccessionRule r;
  r.id = "pow2";
  r.description = "doubling rule with unbounded labels";
  r.axiom = plain(1);
  r.produce = [](const Label& l) {
    std::vector<Label> sons(static_cast<size_t>(l.value - 1), plain(1));
    sons.push_back(plain(l.value + 1));
    return sons;
  };
  r.display_lines = {"axiom: (1)", "(h) -> (1)^(h-1)(h+1)"};
  return r;
}

SuccessionRule gfib_rule(int k) {
  require_rule_k("gfib_rule", k, 2);
  return finite_rule(
      "gfib(" + std::to_string(k) + ")", "k-generalized Fibonacci rule (subscripted)",
      [k](const Label& l) -> std::vector<Label> {
        if (l == plain(1)) return {sub(2, 0)};
        if (l.value == 2 && l.subscript) {
          int j = *l.subscript;
          if (j >= 0 && j <= k - 3) return {sub(2, 0), sub(2, j + 1)};
          if (j == k - 2) return {sub(2, 0), plain(1)};
        }
        unknown_label("gfib", l);
      });
}

SuccessionRule gfib2_rule(int k) {
  require_rule_k("gfib2_rule", k, 2);
  return finite_rule("gfib2(" + std::to_string(k) + ")", "k-generalized Fibonacci rule (bounded)",
                     [k](const Label& l) -> std::vector<Label> {
                       int h = l.value;
                       if (l.subscript || h < 1 || h > k) unknown_label("gfib2", l);
                       std::vector<Label> sons(static_cast<size_t>(h - 1), plain(1));
                       sons.push_back(plain(h < k ? h + 1 : k));
                       return sons;
                     });
}

SuccessionRule cat1_rule(int k) {
  require_rule_k("cat1_rule", k, 2);
  return finite_rule("cat1(" + std::to_string(k) + ")", "P-chain rule: Catalan-like, top label saturates",
                     [k](const Label& l) -> std::vector<Label> {
                       int h = l.value;
                       if (l.subscript || h < 1 || h > k) unknown_label("cat1", l);
                       std::vector<Label> sons;
                       for (int e = 2; e <= h; ++e) sons.push_back(plain(e));
                       sons.push_back(plain(h < k ? h + 1 : k));
                       return sons;
                     });
}

SuccessionRule omega_rule(int k) {
  require_rule_k("omega_rule", k, 3);
  SuccessionRule r;
  r.id = "omega(" + std::to_string(k) + ")";
  r.description = "M-chain rule: unbounded labels, mid-range values collapse";
  r.axiom = plain(1);
  r.produce = [k](const Label& l) {
    int h = l.value;
    if (l.subscript || h < 1) unknown_label("omega", l);
    std::vector<Label> sons;
    if (h < k) {
      for (int e = 2; e <= h; ++e) sons.push_back(plain(e));
    } else {
      for (int e = 2; e <= k - 2; ++e) sons.push_back(plain(e));
      for (int i = 0; i < h - k + 2; ++i) sons.push_back(plain(k - 1));
    }
    sons.push_back(plain(h + 1));
    return sons;
  };
  r.display_lines = {"axiom: (1)", "(h) -> (2)(3)...(h)(h+1)                    for h < " + std::to_string(k),
                     "(h) -> (2)(3)...(" + std::to_string(k - 2) + ")(" + std::to_string(k - 1) + ")^(h-" +
                         std::to_string(k) + "+2)(h+1)   for h >= " + std::to_string(k)};
  return r;
}

SuccessionRule direct_rule(int k) {
  require_rule_k("direct_rule", k, 2);
  return finite_rule("direct(" + std::to_string(k) + ")", "Pell-to-Catalan rule: top label doubles its predecessor",
                     [k](const Label& l) -> std::vector<Label> {
                       int h = l.value;
                       if (l.subscript || h < 1 || h > k) unknown_label("direct", l);
                       std::vector<Label> sons;
                       if (h < k) {
                         for (int e = 2; e <= h; ++e) sons.push_back(plain(e));
                         sons.push_back(plain(h + 1));
                       } else {
                         for (int e = 2; e <= k - 1; ++e) sons.push_back(plain(e));
                         sons.push_back(plain(k - 1));
                         sons.push_back(plain(k));
                       }
                       return sons;
                     });
}

SuccessionRule evf1_rule(int k) {
  require_rule_k("evf1_rule", k, 3);
  return finite_rule(
      "evf1(" + std::to_string(k) + ")", "even-index Fibonacci rule (subscripted)",
      [k](const Label& l) -> std::vector<Label> {
        if (l == plain(1)) return {plain(2)};
        if (l == plain(2)) return {plain(2), sub(3, 0)};
        if (l.value == 3 && l.subscript) {
          int j = *l.subscript;
          if (j == k - 3) return {plain(2), plain(2), sub(3, 0)};
          if (j >= 0 && j < k - 3) return {plain(2), sub(3, 0), sub(3, j + 1)};
        }
        unknown_label("evf1", l);
      });
}

SuccessionRule evf2_rule(int k) {
  require_rule_k("evf2_rule", k, 3);
  return finite_rule("evf2(" + std::to_string(k) + ")", "even-index Fibonacci rule (bounded)",
                     [k](const Label& l) -> std::vector<Label> {
                       int h = l.value;
                       if (l.subscript || h < 1 || h > k) unknown_label("evf2", l);
                       std::vector<Label> sons(static_cast<size_t>(h - 1), plain(2));
                       sons.push_back(plain(h < k ? h + 1 : k));
                       return sons;
                     });
}

namespace {

struct RuleSpec {
  const char* id;
  bool parametric;
  int k_min;
  SuccessionRule (*fixed)();
  SuccessionRule (*with_k)(int);
};

constexpr RuleSpec kRuleSpecs[] = {
    {"rscat", false, 0, rscat_rule, nullptr},  {"rsfibo", false, 0, rsfibo_rule, nullptr},
    {"rs2fin", false, 0, rs2fin_rule, nullptr}, {"pow2", false, 0, pow2_rule, nullptr},
    {"gfib", true, 2, nullptr, gfib_rule},      {"gfib2", true, 2, nullptr, gfib2_rule},
    {"cat1", true, 2, nullptr, cat1_rule},      {"omega", true, 3, nullptr, omega_rule},
    {"direct", true, 2, nullptr, direct_rule},  {"evf1", true, 3, nullptr, evf1_rule},
    {"evf2", true, 3, nullptr, evf2_rule},
};

}  // namespace

SuccessionRule rule_by_id(const std::string& id, std::optional<int> k) {
  std::string name = id;
  if (size_t colon = id.find(':'); colon != std::string::npos) {
    name = id.substr(0, colon);
    k = std::stoi(id.substr(colon + 1));
  }
  for (const RuleSpec& spec : kRuleSpecs) {
    if (name != spec.id) continue;
    if (!spec.parametric) {
      if (k) throw std::domain_error("rule " + name + " takes no k");
      return spec.fixed();
    }
    if (!k) throw std::domain_error("rule " + name + " requires k");
    return spec.with_k(*k);
  }
  throw std::invalid_argument("unknown rule id: " + id);
}

std::vector<LabelDistribution> label_dynamics(const SuccessionRule& rule, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<LabelDistribution> levels;
  levels.reserve(static_cast<size_t>(n_max) + 1);
  levels.push_back({{rule.axiom, CheckedInt(1)}});
  for (int n = 0; n < n_max; ++n) {
    LabelDistribution next;
    for (const auto& [label, count] : levels.back()) {
      std::vector<Label> sons = rule.produce(label);
      if (static_cast<int>(sons.size()) != label.value)
        throw std::logic_error("rule " + rule.id + ": label " + label.str() + " produced " +
                               std::to_string(sons.size()) + " sons, expected " +
                               std::to_string(label.value));
      for (const Label& s : sons) next[s] += count;
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

CountSeries level_counts(const SuccessionRule& rule, int n_max) {
  std::vector<LabelDistribution> levels = label_dynamics(rule, n_max);
  CountSeries out;
  out.reserve(levels.size());
  for (const LabelDistribution& dist : levels) {
    CheckedInt total = 0;
    for (const auto& [label, count] : dist) total += count;
    out.push_back(total);
  }
  return out;
}

bool VerifyReport::all_equal() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const VerifyLevel& l) { return l.counts_equal && l.labels_equal; });
}

VerifyReport verify_rule_against_eco(const SuccessionRule& rule, const AvoidanceClass& cls,
                                     int n_max, const EnumerationLimits& limits) {
  std::vector<LabelDistribution> rule_levels = label_dynamics(rule, n_max);
  std::vector<std::vector<Permutation>> eco = eco_levels(cls, n_max, limits);

  VerifyReport report;
  for (int n = 0; n <= n_max; ++n) {
    VerifyLevel lvl;
    lvl.n = n;
    for (const auto& [label, count] : rule_levels[static_cast<size_t>(n)]) {
      lvl.rule_count += count;
      lvl.rule_value_dist[label.value] += count;
    }
    const std::vector<Permutation>& members = eco[static_cast<size_t>(n)];
    lvl.eco_count = CheckedInt(static_cast<long long>(members.size()));
    lvl.eco_value_dist = active_site_distribution(members, cls);
    lvl.counts_equal = lvl.rule_count == lvl.eco_count;
    lvl.labels_equal = lvl.rule_value_dist == lvl.eco_value_dist;
    report.levels.push_back(std::move(lvl));
  }
  return report;
}

}  // namespace pav
