#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "pavenum/checked_int.hpp"

namespace pav {

// Exact integer polynomial; coefficient index = degree, trailing zeros
// stripped, zero polynomial = empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs);
  explicit IntPolynomial(std::vector<CheckedInt> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  bool is_zero() const { return c_.empty(); }
  CheckedInt coeff(int i) const;  // zero beyond the stored degree

  friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string str() const;  // e.g. "1 - 2*x + x^4"; zero prints "0"

 private:
  void normalize();
  std::vector<CheckedInt> c_;
};

// num/den with den(0) != 0 so the power series at 0 exists. Not reduced;
// equality is cross-multiplicative.
struct RationalGF {
  IntPolynomial num;
  IntPolynomial den;
  std::string str() const;  // "(num)/(den)"
};

// Validates the denominator's constant term (std::invalid_argument).
RationalGF make_gf(IntPolynomial num, IntPolynomial den);

// a.num * b.den == b.num * a.den.
bool gf_equal(const RationalGF& a, const RationalGF& b);

// Power-series coefficients a_0..a_n_max, exact; a non-integer coefficient
// (possible only for a malformed gf) throws std::domain_error.
CountSeries series(const RationalGF& gf, int n_max);

// Closed forms.
RationalGF fib_gf();         // 1/(1-x-x^2)                   Fibonacci
RationalGF t_gf();           // (1-x)/(1-2x)                  2^{n-1}
RationalGF fbar_gf();        // (1-2x)/(1-3x+x^2)             even-index Fibonacci
RationalGF tk_gf(int k);     // (1-x)/(1-2x+x^{k+1}), k >= 1  k-generalized Fibonacci
RationalGF fbark_gf(int k);  // (1-2x+x^k)/(1-3x+x^2+x^k), k >= 3

// Convergents of the map f -> 1/(1 - x f), whose fixed point is the Catalan
// generating function. P-chain starts at f_1 = 1/(1-x); M-chain starts at
// g_3 = (1-2x)/(1-3x+x^2). Inadmissible k (P: k < 1, M: k < 3) throws.
enum class Chain { P, M };
RationalGF convergent_chain(Chain kind, int k);

// Catalan numbers via the convolution C_n = sum C_{n-1-i} C_i ...
CountSeries catalan_terms(int n_max);
// ... and via the closed formula C_n = binom(2n, n)/(n+1), kept separate so
// the two can check each other.
CountSeries catalan_closed_form(int n_max);

// Lookup by the id strings the class catalog uses: "fib", "t", "fbar",
// "tk", "fbark", "convergentP", "convergentM", "catalan". Parametric ids
// take k from the argument or from a ":k" suffix ("fbark:3").
// gf_by_id returns nullopt for "catalan", whose series is not rational.
std::optional<RationalGF> gf_by_id(const std::string& gf_id, std::optional<int> k = std::nullopt);
CountSeries series_by_id(const std::string& gf_id, std::optional<int> k, int n_max);

}  // namespace pav
