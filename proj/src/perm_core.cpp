#include "pavenum/perm_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace pav {

namespace {

void check_is_permutation(const std::vector<int>& values) {
  int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : values) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Permutation: values must be a rearrangement of 1..n");
    seen[static_cast<size_t>(v)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  check_is_permutation(values_);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  values.reserve(text.size());
  for (char c : text) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("Permutation::parse: digits 1..9 only, got '" + std::string(1, c) + "'");
    values.push_back(c - '0');
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation::identity: negative length");
  std::vector<int> values(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(values));
}

std::string Permutation::str() const {
  if (empty()) return "e";
  std::string out;
  if (size() <= 9) {
    for (int v : values_) out.push_back(static_cast<char>('0' + v));
  } else {
    for (size_t i = 0; i < values_.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += std::to_string(values_[i]);
    }
  }
  return out;
}

AvoidanceClass::AvoidanceClass(std::vector<Pattern> basis, std::string name, std::optional<int> k)
    : basis_(std::move(basis)), name_(std::move(name)), k_(k) {
  if (basis_.empty()) throw std::invalid_argument("AvoidanceClass: empty basis");
  for (const Pattern& p : basis_)
    if (p.empty()) throw std::invalid_argument("AvoidanceClass: empty pattern in basis");
  std::sort(basis_.begin(), basis_.end(), [](const Pattern& a, const Pattern& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.values() < b.values();
  });
  if (std::adjacent_find(basis_.begin(), basis_.end()) != basis_.end())
    throw std::invalid_argument("AvoidanceClass: duplicate pattern in basis");
}

std::string AvoidanceClass::basis_str() const {
  std::string out;
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += basis_[i].str();
  }
  return out;
}

namespace {

// Backtracking subsequence match: extend a partial choice of positions so
// the chosen values realize the pattern's relative order. The pattern tells
// us, for each prefix length, where the next value must sit among the
// values already chosen, which prunes hard.
bool match_from(std::span<const int> perm, std::span<const int> pat, std::vector<int>& chosen,
                size_t next_pos) {
  size_t got = chosen.size();
  if (got == pat.size()) return true;
  for (size_t i = next_pos; i + (pat.size() - got) <= perm.size(); ++i) {
    int v = perm[i];
    bool ok = true;
    for (size_t j = 0; j < got; ++j) {
      // v must compare to each chosen value the way pat[got] compares to pat[j].
      if ((pat[got] < pat[j]) != (v < perm[static_cast<size_t>(chosen[j])])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(static_cast<int>(i));
    if (match_from(perm, pat, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains(std::span<const int> perm, std::span<const int> pat) {
  if (pat.empty()) return true;
  if (pat.size() > perm.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pat.size());
  return match_from(perm, pat, chosen, 0);
}

bool contains(const Permutation& perm, const Pattern& pat) {
  return contains(perm.span(), pat.span());
}

bool avoids_all(std::span<const int> perm, const AvoidanceClass& cls) {
  for (const Pattern& p : cls.basis())
    if (contains(perm, p.span())) return false;
  return true;
}

bool avoids_all(const Permutation& perm, const AvoidanceClass& cls) {
  return avoids_all(perm.span(), cls);
}

Permutation insert_max(const Permutation& perm, int site) {
  int n = perm.size();
  if (site < 1 || site > n + 1)
    throw std::out_of_range("insert_max: site " + std::to_string(site) + " not in 1.." +
                            std::to_string(n + 1));
  std::vector<int> values;
  values.reserve(static_cast<size_t>(n) + 1);
  for (int pos = 1; pos <= n + 1; ++pos) {
    if (pos == site) values.push_back(n + 1);
    if (pos <= n) values.push_back(perm.at(pos));
  }
  return Permutation(std::move(values));
}

std::vector<int> active_sites(const Permutation& perm, const AvoidanceClass& cls) {
  if (!avoids_all(perm, cls))
    throw std::invalid_argument("active_sites: permutation " + perm.str() + " is not in the class");
  std::vector<int> sites;
  int n = perm.size();
  std::vector<int> child(static_cast<size_t>(n) + 1);
  for (int site = 1; site <= n + 1; ++site) {
    // Build insert_max(perm, site) in place.
    size_t w = 0;
    for (int pos = 1; pos <= n + 1; ++pos) {
      if (pos == site) child[w++] = n + 1;
      if (pos <= n) child[w++] = perm.at(pos);
    }
    if (avoids_all(std::span<const int>(child), cls)) sites.push_back(site);
  }
  return sites;
}

Permutation reverse_complement(const Permutation& perm) {
  int n = perm.size();
  std::vector<int> values(static_cast<size_t>(n));
  for (int pos = 1; pos <= n; ++pos) values[static_cast<size_t>(n - pos)] = n + 1 - perm.at(pos);
  return Permutation(std::move(values));
}

}  // namespace pav
