#include "pavenum/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pavenum/enumeration.hpp"
#include "pavenum/genfunc.hpp"
#include "pavenum/patterns_catalog.hpp"
#include "pavenum/perm_core.hpp"
#include "pavenum/production_matrix.hpp"
#include "pavenum/succession_engine.hpp"

namespace pav::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rectangular text output with one rendering per format.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void render(std::ostream& os, const std::string& format) const {
    if (format == "plain") {
      std::vector<size_t> width(header.size());
      for (size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
      for (const auto& row : rows)
        for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
      auto emit = [&](const std::vector<std::string>& row) {
        for (size_t j = 0; j < row.size(); ++j) {
          if (j > 0) os << "  ";
          os << row[j];
          if (j + 1 < row.size()) os << std::string(width[j] - row[j].size(), ' ');
        }
        os << "\n";
      };
      emit(header);
      for (const auto& row : rows) emit(row);
      return;
    }
    const char sep = format == "csv" ? ',' : '\t';
    auto emit = [&](const std::vector<std::string>& row) {
      for (size_t j = 0; j < row.size(); ++j) {
        if (j > 0) os << sep;
        os << row[j];
      }
      os << "\n";
    };
    emit(header);
    for (const auto& row : rows) emit(row);
  }
};

struct Options {
  std::string class_id;
  std::string basis;
  std::optional<int> k;
  int n = 8;
  int terms = 10;
  std::vector<std::string> methods;
  std::string gf;
  std::string rule;
  std::string format = "tsv";
  std::string out_file;
  EnumerationLimits limits;
};

EnumerationLimits limits_from_env() {
  EnumerationLimits limits;
  // Bad values become sentinels that validate_limits rejects after parsing.
  if (const char* v = std::getenv("PAVENUM_FACTORIAL_CAP")) {
    long long parsed = std::strtoll(v, nullptr, 10);
    limits.factorial_cap = parsed > 0 && parsed <= INT32_MAX ? static_cast<int>(parsed) : -1;
  }
  if (const char* v = std::getenv("PAVENUM_NODE_CAP")) {
    long long parsed = std::strtoll(v, nullptr, 10);
    limits.node_cap = parsed > 0 ? static_cast<std::uint64_t>(parsed) : 0;
  }
  return limits;
}

void validate_limits(const EnumerationLimits& limits) {
  if (limits.factorial_cap < 1 || limits.node_cap == 0) throw UsageError("caps must be positive");
}

// The class named by --class/--k or --basis, plus its catalog entry when it
// has one (raw bases have no attached rule/GF/matrix methods).
struct ResolvedClass {
  AvoidanceClass cls;
  const ClassCatalogEntry* entry = nullptr;
};

ResolvedClass resolve_class(const Options& opt) {
  if (!opt.class_id.empty() && !opt.basis.empty())
    throw UsageError("--class and --basis are mutually exclusive");
  if (opt.class_id.empty() && opt.basis.empty())
    throw UsageError("one of --class or --basis is required");
  if (!opt.class_id.empty()) {
    const ClassCatalogEntry& entry = catalog_entry(opt.class_id);  // throws for unknown id
    return {make_class(opt.class_id, opt.k), &entry};
  }
  if (opt.k)
    throw UsageError("--k applies only to --class");
  std::vector<Pattern> patterns;
  std::string token;
  std::istringstream in(opt.basis);
  try {
    while (std::getline(in, token, ',')) patterns.push_back(Pattern::parse(token));
    return {AvoidanceClass(std::move(patterns), opt.basis), nullptr};
  } catch (const std::invalid_argument& e) {
    throw UsageError("bad --basis: " + std::string(e.what()));
  }
}

std::optional<int> effective_k(const ResolvedClass& rc) {
  return rc.cls.k();
}

// Method availability and evaluation for `count` and `verify`.
const std::vector<std::string> kMethodOrder = {"brute", "eco", "rule", "matrix", "gf"};

bool method_available(const std::string& method, const ResolvedClass& rc, const Options& opt) {
  if (method == "eco") return true;
  if (method == "brute") return opt.n <= opt.limits.factorial_cap;
  if (method == "rule" || method == "matrix")
    return rc.entry != nullptr && !rc.entry->rule_id.empty();
  if (method == "gf") return rc.entry != nullptr && !rc.entry->gf_id.empty();
  return false;
}

CountSeries run_method(const std::string& method, const ResolvedClass& rc, const Options& opt) {
  if (method == "eco") return eco_counts(rc.cls, opt.n, opt.limits);
  if (method == "brute") return brute_force_counts(rc.cls, opt.n, opt.limits);
  if (method == "rule")
    return level_counts(rule_by_id(rc.entry->rule_id, effective_k(rc)), opt.n);
  if (method == "matrix") {
    SuccessionRule rule = rule_by_id(rc.entry->rule_id, effective_k(rc));
    return matrix_counts(from_rule(rule, TruncationSpec{opt.n + 4, opt.n}), opt.n);
  }
  if (method == "gf") return series_by_id(rc.entry->gf_id, effective_k(rc), opt.n);
  throw UsageError("unknown method: " + method + " (expected brute|eco|rule|matrix|gf)");
}

std::ostream& payload_stream(const Options& opt, std::ostream& out, std::ofstream& file) {
  if (opt.out_file.empty()) return out;
  file.open(opt.out_file);
  if (!file) throw UsageError("cannot open --out file: " + opt.out_file);
  return file;
}

int cmd_count(const Options& opt, std::ostream& out) {
  ResolvedClass rc = resolve_class(opt);
  std::vector<std::string> methods = opt.methods;
  if (methods.empty()) {
    for (const std::string& m : kMethodOrder)
      if (method_available(m, rc, opt)) methods.push_back(m);
  } else {
    for (const std::string& m : methods)
      if (std::find(kMethodOrder.begin(), kMethodOrder.end(), m) == kMethodOrder.end())
        throw UsageError("unknown method: " + m + " (expected brute|eco|rule|matrix|gf)");
    for (const std::string& m : methods)
      if ((m == "rule" || m == "matrix" || m == "gf") && !method_available(m, rc, opt))
        throw UsageError("method " + m + " is not available for class " + rc.cls.name());
  }

  std::map<std::string, CountSeries> results;
  for (const std::string& m : methods) results[m] = run_method(m, rc, opt);

  TextTable table;
  table.header = {"n"};
  for (const std::string& m : methods) table.header.push_back(m);
  for (int n = 0; n <= opt.n; ++n) {
    std::vector<std::string> row = {std::to_string(n)};
    for (const std::string& m : methods) row.push_back(results[m][static_cast<size_t>(n)].str());
    table.rows.push_back(std::move(row));
  }
  std::ofstream file;
  table.render(payload_stream(opt, out, file), opt.format);
  return exit_ok;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  ResolvedClass rc = resolve_class(opt);
  std::vector<std::vector<Permutation>> levels = eco_levels(rc.cls, opt.n, opt.limits);
  TextTable table;
  table.header = {"n", "permutation"};
  for (size_t n = 0; n < levels.size(); ++n)
    for (const Permutation& p : levels[n]) table.rows.push_back({std::to_string(n), p.str()});
  std::ofstream file;
  table.render(payload_stream(opt, out, file), opt.format);
  return exit_ok;
}

int cmd_series(const Options& opt, std::ostream& out) {
  if (opt.gf.empty()) throw UsageError("series requires --gf");
  std::optional<RationalGF> gf = gf_by_id(opt.gf, opt.k);  // validates the id
  CountSeries coeffs = series_by_id(opt.gf, opt.k, opt.terms - 1);
  std::ofstream file;
  std::ostream& os = payload_stream(opt, out, file);
  os << "# gf: " << (gf ? gf->str() : "Catalan series (no rational closed form)") << "\n";
  TextTable table;
  table.header = {"n", "coefficient"};
  for (size_t n = 0; n < coeffs.size(); ++n)
    table.rows.push_back({std::to_string(n), coeffs[n].str()});
  table.render(os, opt.format);
  return exit_ok;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  ResolvedClass rc = resolve_class(opt);
  std::vector<std::string> methods;
  for (const std::string& m : kMethodOrder)
    if (method_available(m, rc, opt)) methods.push_back(m);

  std::map<std::string, CountSeries> results;
  for (const std::string& m : methods) results[m] = run_method(m, rc, opt);

  // Label-distribution comparison rides along when a rule is attached.
  std::optional<VerifyReport> report;
  if (rc.entry && !rc.entry->rule_id.empty())
    report = verify_rule_against_eco(rule_by_id(rc.entry->rule_id, effective_k(rc)), rc.cls, opt.n,
                                     opt.limits);

  bool all_ok = true;
  TextTable table;
  table.header = {"n"};
  for (const std::string& m : methods) table.header.push_back(m);
  table.header.push_back("agree");
  if (report) table.header.push_back("labels_agree");
  for (int n = 0; n <= opt.n; ++n) {
    std::vector<std::string> row = {std::to_string(n)};
    bool agree = true;
    for (const std::string& m : methods) {
      row.push_back(results[m][static_cast<size_t>(n)].str());
      if (!(results[m][static_cast<size_t>(n)] == results[methods.front()][static_cast<size_t>(n)]))
        agree = false;
    }
    row.push_back(agree ? "yes" : "no");
    if (report) {
      bool labels = report->levels[static_cast<size_t>(n)].labels_equal;
      row.push_back(labels ? "yes" : "no");
      if (!labels) all_ok = false;
    }
    if (!agree) all_ok = false;
    table.rows.push_back(std::move(row));
  }
  std::ofstream file;
  table.render(payload_stream(opt, out, file), opt.format);
  if (!all_ok) {
    for (int n = 0; n <= opt.n; ++n) {
      std::string diff;
      for (const std::string& m : methods) {
        const CheckedInt& v = results[m][static_cast<size_t>(n)];
        if (!(v == results[methods.front()][static_cast<size_t>(n)]))
          diff += " " + m + "=" + v.str();
      }
      if (!diff.empty())
        err << "mismatch at n=" << n << ": " << methods.front() << "="
            << results[methods.front()][static_cast<size_t>(n)].str() << diff << "\n";
    }
    return exit_mismatch;
  }
  return exit_ok;
}

int cmd_table(const Options& opt, std::ostream& out) {
  constexpr int kTerms = 8;
  EnumerationLimits limits = opt.limits;
  TextTable table;
  table.header = {"id", "k", "basis", "sequence", "first_terms"};
  for (const ClassCatalogEntry& entry : catalog()) {
    int k_lo = entry.parametric ? entry.k_min : 0;
    int k_hi = entry.parametric ? entry.k_max : 0;
    for (int k = k_lo; k <= k_hi; ++k) {
      AvoidanceClass cls = entry.builder(k);
      CountSeries counts = eco_counts(cls, kTerms - 1, limits);
      std::string joined;
      for (size_t i = 0; i < counts.size(); ++i) {
        if (i > 0) joined += ",";
        joined += counts[i].str();
      }
      table.rows.push_back({entry.id, entry.parametric ? std::to_string(k) : "-", cls.basis_str(),
                            entry.sequence_name, joined});
    }
  }
  std::ofstream file;
  table.render(payload_stream(opt, out, file), opt.format);
  return exit_ok;
}

int cmd_show_rule(const Options& opt, std::ostream& out) {
  SuccessionRule rule;
  if (!opt.rule.empty()) {
    rule = rule_by_id(opt.rule, opt.k);
  } else if (!opt.class_id.empty()) {
    const ClassCatalogEntry& entry = catalog_entry(opt.class_id);
    if (entry.rule_id.empty())
      throw UsageError("class " + opt.class_id + " has no attached succession rule");
    if (entry.parametric && !opt.k)
      throw std::domain_error("class " + opt.class_id + " requires --k");
    rule = rule_by_id(entry.rule_id, opt.k);
  } else {
    throw UsageError("show-rule requires --rule or --class");
  }
  std::ofstream file;
  std::ostream& os = payload_stream(opt, out, file);
  os << "rule: " << rule.id << "\n";
  os << "# " << rule.description << "\n";
  for (const std::string& line : rule.display_lines) os << line << "\n";
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pattern-avoiding permutation classes between Fibonacci and Catalan"};
  app.name("pavenum");
  app.require_subcommand(1);

  Options opt;
  opt.limits = limits_from_env();

  auto add_common = [&](CLI::App* cmd, bool with_class) {
    cmd->add_option("--format", opt.format, "output format: tsv|csv|plain")
        ->check(CLI::IsMember({"tsv", "csv", "plain"}));
    cmd->add_option("--out", opt.out_file, "write output to a file instead of stdout");
    cmd->add_option("--factorial-cap", opt.limits.factorial_cap, "max n for brute-force iteration");
    cmd->add_option("--node-cap", opt.limits.node_cap, "max generating-tree nodes");
    if (with_class) {
      cmd->add_option("--class", opt.class_id, "catalog class id (see `table`)");
      cmd->add_option("--basis", opt.basis, "raw basis, e.g. \"123,213,1432\" (digits 1-9)");
      cmd->add_option("--k", opt.k, "family parameter for parametric classes");
    }
  };

  CLI::App* count = app.add_subcommand("count", "per-length counts via selected methods");
  add_common(count, true);
  count->add_option("--n", opt.n, "maximum permutation length")->check(CLI::NonNegativeNumber);
  count->add_option("--method", opt.methods, "brute|eco|rule|matrix|gf (repeatable; default: all available)");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list the class members by length");
  add_common(enumerate, true);
  enumerate->add_option("--n", opt.n, "maximum permutation length")->check(CLI::NonNegativeNumber);

  CLI::App* series_cmd = app.add_subcommand("series", "generating-function series coefficients");
  add_common(series_cmd, false);
  series_cmd->add_option("--gf", opt.gf, "fib|t|fbar|tk|fbark|convergentP|convergentM|catalan");
  series_cmd->add_option("--k", opt.k, "parameter for tk/fbark/convergent gfs");
  series_cmd->add_option("--terms", opt.terms, "number of coefficients")->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand("verify", "cross-check every applicable method");
  add_common(verify, true);
  verify->add_option("--n", opt.n, "maximum permutation length")->check(CLI::NonNegativeNumber);

  CLI::App* table_cmd = app.add_subcommand("table", "the full class catalog with first terms");
  add_common(table_cmd, false);

  CLI::App* show_rule = app.add_subcommand("show-rule", "display a succession rule");
  add_common(show_rule, false);
  show_rule->add_option("--rule", opt.rule,
                        "rule id: rscat|rsfibo|rs2fin|pow2|gfib|gfib2|cat1|omega|direct|evf1|evf2");
  show_rule->add_option("--class", opt.class_id, "catalog class id whose rule to show");
  show_rule->add_option("--k", opt.k, "parameter for parametric rules");

  std::vector<const char*> argv = {"pavenum"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    validate_limits(opt.limits);
    if (count->parsed()) return cmd_count(opt, out);
    if (enumerate->parsed()) return cmd_enumerate(opt, out);
    if (series_cmd->parsed()) return cmd_series(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    if (table_cmd->parsed()) return cmd_table(opt, out);
    if (show_rule->parsed()) return cmd_show_rule(opt, out);
    err << "usage error: no command\n";
    return exit_usage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return exit_cap_exceeded;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << "\n";
    return exit_overflow;
  } catch (const std::domain_error& e) {
    err << "k out of range: " << e.what() << "\n";
    return exit_k_out_of_range;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_unknown_class;
  }
}

}  // namespace pav::cli
