#include "pavenum/genfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pav {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.push_back(CheckedInt(v));
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<CheckedInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CheckedInt IntPolynomial::coeff(int i) const {
  if (i < 0) throw std::out_of_range("IntPolynomial::coeff: negative degree");
  if (i >= static_cast<int>(c_.size())) return CheckedInt(0);
  return c_[static_cast<size_t>(i)];
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<CheckedInt> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<CheckedInt> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<CheckedInt> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    const CheckedInt& v = c_[i];
    if (v.is_zero()) continue;
    bool negative = v < CheckedInt(0);
    CheckedInt mag = negative ? -v : v;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = mag == CheckedInt(1);
    if (i == 0) {
      out += mag.str();
    } else {
      if (!unit) out += mag.str() + "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string RationalGF::str() const { return "(" + num.str() + ")/(" + den.str() + ")"; }

RationalGF make_gf(IntPolynomial num, IntPolynomial den) {
  if (den.coeff(0).is_zero())
    throw std::invalid_argument("RationalGF: denominator constant term must be nonzero");
  return RationalGF{std::move(num), std::move(den)};
}

bool gf_equal(const RationalGF& a, const RationalGF& b) { return a.num * b.den == b.num * a.den; }

CountSeries series(const RationalGF& gf, int n_max) {
  if (n_max < 0) throw std::invalid_argument("series: n_max must be nonnegative");
  if (gf.den.coeff(0).is_zero())
    throw std::invalid_argument("series: denominator constant term must be nonzero");
  CheckedInt d0 = gf.den.coeff(0);
  CountSeries a(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    CheckedInt rhs = gf.num.coeff(n);
    for (int i = 1; i <= std::min(n, gf.den.degree()); ++i)
      rhs -= gf.den.coeff(i) * a[static_cast<size_t>(n - i)];
    a[static_cast<size_t>(n)] = rhs.div_exact(d0);
  }
  return a;
}

RationalGF fib_gf() { return make_gf({1}, {1, -1, -1}); }

RationalGF t_gf() { return make_gf({1, -1}, {1, -2}); }

RationalGF fbar_gf() { return make_gf({1, -2}, {1, -3, 1}); }

RationalGF tk_gf(int k) {
  if (k < 1) throw std::domain_error("tk_gf: k must be >= 1");
  std::vector<CheckedInt> den(static_cast<size_t>(k) + 2);
  den[0] = 1;
  den[1] = -2;
  den[static_cast<size_t>(k) + 1] = 1;
  return make_gf({1, -1}, IntPolynomial(std::move(den)));
}

RationalGF fbark_gf(int k) {
  if (k < 3) throw std::domain_error("fbark_gf: k must be >= 3");
  std::vector<CheckedInt> num(static_cast<size_t>(k) + 1);
  num[0] = 1;
  num[1] = -2;
  num[static_cast<size_t>(k)] = 1;
  std::vector<CheckedInt> den(static_cast<size_t>(k) + 1);
  den[0] = 1;
  den[1] = -3;
  den[2] = 1;
  den[static_cast<size_t>(k)] += CheckedInt(1);
  return make_gf(IntPolynomial(std::move(num)), IntPolynomial(std::move(den)));
}

RationalGF convergent_chain(Chain kind, int k) {
  RationalGF f;
  int steps = 0;
  if (kind == Chain::P) {
    if (k < 1) throw std::domain_error("convergent_chain: P-chain needs k >= 1");
    f = make_gf({1}, {1, -1});
    steps = k - 1;
  } else {
    if (k < 3) throw std::domain_error("convergent_chain: M-chain needs k >= 3");
    f = fbar_gf();
    steps = k - 3;
  }
  // f -> 1/(1 - x f); for p/q that is q/(q - x p).
  for (int s = 0; s < steps; ++s) {
    IntPolynomial shifted = IntPolynomial({0, 1}) * f.num;
    f = make_gf(f.den, f.den - shifted);
  }
  return f;
}

CountSeries catalan_terms(int n_max) {
  if (n_max < 0) throw std::invalid_argument("catalan_terms: n_max must be nonnegative");
  CountSeries c(static_cast<size_t>(n_max) + 1);
  c[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    CheckedInt total = 0;
    for (int i = 0; i <= n - 1; ++i) total += c[static_cast<size_t>(n - 1 - i)] * c[static_cast<size_t>(i)];
    c[static_cast<size_t>(n)] = total;
  }
  return c;
}

CountSeries catalan_closed_form(int n_max) {
  if (n_max < 0) throw std::invalid_argument("catalan_closed_form: n_max must be nonnegative");
  CountSeries c(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    // binom(2n, n) as a running product binom(n+i, i) = binom(n+i-1, i-1)*(n+i)/i.
    CheckedInt b = 1;
    for (int i = 1; i <= n; ++i) b = (b * CheckedInt(n + i)).div_exact(CheckedInt(i));
    c[static_cast<size_t>(n)] = b.div_exact(CheckedInt(n + 1));
  }
  return c;
}

namespace {

struct GfId {
  std::string name;
  std::optional<int> k;
};

GfId parse_gf_id(const std::string& gf_id, std::optional<int> k) {
  GfId out{gf_id, k};
  if (size_t colon = gf_id.find(':'); colon != std::string::npos) {
    out.name = gf_id.substr(0, colon);
    out.k = std::stoi(gf_id.substr(colon + 1));
  }
  return out;
}

int require_gf_k(const GfId& id) {
  if (!id.k) throw std::domain_error("gf " + id.name + " requires k");
  return *id.k;
}

void reject_gf_k(const GfId& id) {
  if (id.k) throw std::domain_error("gf " + id.name + " takes no k");
}

}  // namespace

std::optional<RationalGF> gf_by_id(const std::string& gf_id, std::optional<int> k) {
  GfId id = parse_gf_id(gf_id, k);
  if (id.name == "fib" || id.name == "t" || id.name == "fbar" || id.name == "catalan")
    reject_gf_k(id);
  if (id.name == "fib") return fib_gf();
  if (id.name == "t") return t_gf();
  if (id.name == "fbar") return fbar_gf();
  if (id.name == "tk") return tk_gf(require_gf_k(id));
  if (id.name == "fbark") return fbark_gf(require_gf_k(id));
  if (id.name == "convergentP") return convergent_chain(Chain::P, require_gf_k(id));
  if (id.name == "convergentM") return convergent_chain(Chain::M, require_gf_k(id));
  if (id.name == "catalan") return std::nullopt;
  throw std::invalid_argument("unknown gf id: " + gf_id);
}

CountSeries series_by_id(const std::string& gf_id, std::optional<int> k, int n_max) {
  std::optional<RationalGF> gf = gf_by_id(gf_id, k);
  if (!gf) return catalan_terms(n_max);
  return series(*gf, n_max);
}

}  // namespace pav
