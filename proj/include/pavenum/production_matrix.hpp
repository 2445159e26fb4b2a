#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pavenum/checked_int.hpp"
#include "pavenum/succession_engine.hpp"

namespace pav {

// Square integer matrix with checked arithmetic.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int size);
  Matrix(std::initializer_list<std::initializer_list<long long>> rows);

  int size() const { return static_cast<int>(rows_.size()); }
  CheckedInt& at(int i, int j);
  const CheckedInt& at(int i, int j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  std::string str() const;  // aligned integer grid

 private:
  std::vector<std::vector<CheckedInt>> rows_;
};

// Row-vector * matrix.
std::vector<CheckedInt> apply(const std::vector<CheckedInt>& row, const Matrix& m);

// Do the top-left d x d corners of both matrices coincide?
bool window_equal(const Matrix& a, const Matrix& b, int d);

// How an infinite production matrix is cut down to a finite window. `size`
// caps the matrix dimension; counts derived from the matrix are exact for
// n <= guarantee_level. Requires size >= guarantee_level + 2: a label's
// value grows by at most one per generation from the axiom (1), so that
// margin always covers every label a counted level can touch.
struct TruncationSpec {
  int size = 0;
  int guarantee_level = 0;
};

// Production matrix of a rule: entry (i, j) = multiplicity of labels[j] in
// produce(labels[i]). The window holds the labels reachable from the axiom
// with value <= guarantee_level + 2 and subscript <= guarantee_level, in
// breadth-first discovery order (labels[axiom_index] = axiom). `exact` is
// set when no reachable production leaves the window, i.e. the rule closed
// up before the bound and the matrix is the whole story.
struct ProductionMatrix {
  Matrix m;
  std::vector<Label> labels;
  int axiom_index = 0;
  bool exact = false;
  int guarantee_level = 0;
};

// Throws std::invalid_argument when the window needs more than spec.size
// rows (the message names the required minimum) or when spec violates its
// own invariant.
ProductionMatrix from_rule(const SuccessionRule& rule, const TruncationSpec& spec);

// Counts via iterated row-vector multiplication from the unit vector at the
// axiom; term n = sum of the vector after n steps. For an inexact window,
// n_max beyond the guarantee level is rejected (std::invalid_argument).
CountSeries matrix_counts(const ProductionMatrix& pm, int n_max);

// Exact k x k matrix built bottom-up from the 1 x 1 base [1] via
//   P_k = [[0, u^T], [0, P_{k-1} + e u^T]],  u^T = (1,0,...,0), e = (1,...,1)^T.
// Closed (exact) for every k; equals from_rule(cat1_rule(k), ...) entrywise.
ProductionMatrix pk_block_recursion(int k);  // k >= 2

// The same block step grown from the truncated base M_3 (the production
// matrix of omega_rule(3)); valid for k >= 4. Equals
// from_rule(omega_rule(k), spec) on the truncated window.
ProductionMatrix mk_block_recursion(int k, const TruncationSpec& spec);

}  // namespace pav
