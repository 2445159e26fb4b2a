#include "pavenum/patterns_catalog.hpp"

#include <stdexcept>

namespace pav {

namespace {

void require_k(const char* fam, int k, int k_min) {
  if (k < k_min)
    throw std::domain_error(std::string("family_") + fam + ": k must be >= " +
                            std::to_string(k_min) + ", got " + std::to_string(k));
}

}  // namespace

Pattern family_r(int k) {
  require_k("r", k, 2);
  std::vector<int> v;
  v.reserve(static_cast<size_t>(k) + 1);
  for (int i = k; i >= 1; --i) v.push_back(i);
  v.push_back(k + 1);
  return Pattern(std::move(v));
}

Pattern family_q(int k) {
  require_k("q", k, 2);
  std::vector<int> v;
  v.reserve(static_cast<size_t>(k) + 1);
  v.push_back(1);
  for (int i = k + 1; i >= 2; --i) v.push_back(i);
  return Pattern(std::move(v));
}

Pattern family_p(int k) {
  require_k("p", k, 2);
  std::vector<int> v;
  v.reserve(static_cast<size_t>(k) + 1);
  for (int i = k - 1; i >= 1; --i) v.push_back(i);
  v.push_back(k + 1);
  v.push_back(k);
  return Pattern(std::move(v));
}

Pattern family_s(int k) {
  require_k("s", k, 3);
  std::vector<int> v;
  v.reserve(static_cast<size_t>(k) + 1);
  v.push_back(2);
  v.push_back(1);
  for (int i = k + 1; i >= 3; --i) v.push_back(i);
  return Pattern(std::move(v));
}

Pattern family_w(int k) {
  // Same word as family_r: the descending run then the new maximum. This is
  // the k-generalization of 3214 that keeps the k=3 class at the Pell basis
  // and reproduces the even-index Fibonacci series for larger k (verified
  // against the brute-force oracle in the test suite).
  require_k("w", k, 3);
  std::vector<int> v;
  v.reserve(static_cast<size_t>(k) + 1);
  for (int i = k; i >= 1; --i) v.push_back(i);
  v.push_back(k + 1);
  return Pattern(std::move(v));
}

const std::vector<PatternFamily>& pattern_families() {
  static const std::vector<PatternFamily> families = {
      {"r", 2, family_r}, {"q", 2, family_q}, {"p", 2, family_p},
      {"s", 3, family_s}, {"w", 3, family_w},
  };
  return families;
}

namespace {

constexpr int kCatalogKMax = 8;  // keeps every basis pattern at length <= 9

Pattern pat(const char* digits) { return Pattern::parse(digits); }

std::string k_name(const std::string& id, int k) { return id + "(" + std::to_string(k) + ")"; }

std::vector<ClassCatalogEntry> build_catalog() {
  std::vector<ClassCatalogEntry> out;

  auto fixed = [&](const char* id, std::vector<const char*> basis, const char* seq, const char* gf,
                   const char* rule) {
    ClassCatalogEntry e;
    e.id = id;
    e.parametric = false;
    std::vector<Pattern> pats;
    for (const char* b : basis) pats.push_back(pat(b));
    e.builder = [id, pats](int) { return AvoidanceClass(pats, id); };
    e.sequence_name = seq;
    e.gf_id = gf;
    e.rule_id = rule;
    out.push_back(std::move(e));
  };

  auto parametric = [&](const char* id, int k_min,
                        std::function<std::vector<Pattern>(int)> basis_fn, const char* seq,
                        const char* gf, const char* rule) {
    ClassCatalogEntry e;
    e.id = id;
    e.parametric = true;
    e.k_min = k_min;
    e.k_max = kCatalogKMax;
    std::string id_str = id;
    e.builder = [id_str, basis_fn](int k) {
      return AvoidanceClass(basis_fn(k), k_name(id_str, k), k);
    };
    e.sequence_name = seq;
    e.gf_id = gf;
    e.rule_id = rule;
    out.push_back(std::move(e));
  };

  fixed("FIB", {"123", "132", "213"}, "Fibonacci", "fib", "rsfibo");
  fixed("FIB_ALT", {"123", "213", "312"}, "naturals 1,1,2,3,4,...", "", "");
  parametric("GFIB", 2, [](int k) { return std::vector<Pattern>{pat("123"), pat("213"), family_q(k)}; },
             "k-generalized Fibonacci", "tk", "gfib");
  parametric("GFIB2", 2, [](int k) { return std::vector<Pattern>{pat("123"), pat("132"), family_r(k)}; },
             "k-generalized Fibonacci", "tk", "gfib2");
  fixed("POW2", {"123", "213"}, "powers of two 2^(n-1)", "t", "rs2fin");
  fixed("POW2B", {"123", "132"}, "powers of two 2^(n-1)", "t", "pow2");
  parametric("CAT1", 2, [](int k) { return std::vector<Pattern>{pat("123"), family_r(k)}; },
             "Catalan convergents (P-chain)", "convergentP", "cat1");
  parametric("CAT2", 3, [](int k) { return std::vector<Pattern>{pat("123"), family_p(k)}; },
             "Catalan convergents (M-chain)", "convergentM", "omega");
  fixed("PELL", {"123", "2143", "3214"}, "Pell", "fbark:3", "direct:3");
  parametric("DIRECT", 2,
             [](int k) { return std::vector<Pattern>{pat("123"), family_p(k), family_r(k)}; },
             "Pell-to-Catalan chain", "", "direct");
  parametric("EVF1", 3, [](int k) { return std::vector<Pattern>{pat("123"), pat("3214"), family_s(k)}; },
             "even-index Fibonacci family", "fbark", "evf1");
  parametric("EVF2", 3, [](int k) { return std::vector<Pattern>{pat("123"), pat("2143"), family_w(k)}; },
             "even-index Fibonacci family", "fbark", "evf2");
  fixed("CATALAN", {"123"}, "Catalan", "catalan", "rscat");

  return out;
}

}  // namespace

const std::vector<ClassCatalogEntry>& catalog() {
  static const std::vector<ClassCatalogEntry> entries = build_catalog();
  return entries;
}

const ClassCatalogEntry& catalog_entry(const std::string& id) {
  for (const ClassCatalogEntry& e : catalog())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown class id: " + id);
}

AvoidanceClass make_class(const std::string& id, std::optional<int> k) {
  const ClassCatalogEntry& e = catalog_entry(id);
  if (!e.parametric) {
    if (k.has_value())
      throw std::domain_error("class " + id + " takes no k");
    return e.builder(0);
  }
  if (!k.has_value())
    throw std::domain_error("class " + id + " requires k in " + std::to_string(e.k_min) + ".." +
                            std::to_string(e.k_max));
  if (*k < e.k_min || *k > e.k_max)
    throw std::domain_error("class " + id + ": k must be in " + std::to_string(e.k_min) + ".." +
                            std::to_string(e.k_max) + ", got " + std::to_string(*k));
  return e.builder(*k);
}

std::string catalog_tsv() {
  std::string out = "id\tk\tbasis\tsequence\n";
  for (const ClassCatalogEntry& e : catalog()) {
    if (!e.parametric) {
      out += e.id + "\t-\t" + e.builder(0).basis_str() + "\t" + e.sequence_name + "\n";
    } else {
      for (int k = e.k_min; k <= e.k_max; ++k)
        out += e.id + "\t" + std::to_string(k) + "\t" + e.builder(k).basis_str() + "\t" +
               e.sequence_name + "\n";
    }
  }
  return out;
}

}  // namespace pav
