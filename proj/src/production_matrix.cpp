#include "pavenum/production_matrix.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace pav {

Matrix::Matrix(int size) {
  if (size < 0) throw std::invalid_argument("Matrix: negative size");
  rows_.assign(static_cast<size_t>(size), std::vector<CheckedInt>(static_cast<size_t>(size)));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw std::invalid_argument("Matrix: initializer must be square");
    std::vector<CheckedInt> row;
    row.reserve(r.size());
    for (long long v : r) row.push_back(CheckedInt(v));
    rows_.push_back(std::move(row));
  }
}

CheckedInt& Matrix::at(int i, int j) {
  return rows_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
}

const CheckedInt& Matrix::at(int i, int j) const {
  return rows_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
}

std::string Matrix::str() const {
  size_t width = 1;
  for (const auto& row : rows_)
    for (const CheckedInt& v : row) width = std::max(width, v.str().size());
  std::string out;
  for (const auto& row : rows_) {
    for (size_t j = 0; j < row.size(); ++j) {
      std::string cell = row[j].str();
      if (j > 0) out.push_back(' ');
      out.append(width - cell.size(), ' ');
      out += cell;
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<CheckedInt> apply(const std::vector<CheckedInt>& row, const Matrix& m) {
  if (static_cast<int>(row.size()) != m.size())
    throw std::invalid_argument("apply: row length does not match matrix size");
  std::vector<CheckedInt> out(row.size());
  for (int i = 0; i < m.size(); ++i) {
    if (row[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < m.size(); ++j)
      out[static_cast<size_t>(j)] += row[static_cast<size_t>(i)] * m.at(i, j);
  }
  return out;
}

bool window_equal(const Matrix& a, const Matrix& b, int d) {
  if (d > a.size() || d > b.size())
    throw std::invalid_argument("window_equal: window exceeds a matrix dimension");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

namespace {

void validate_trunc(const TruncationSpec& spec) {
  if (spec.size < 1) throw std::invalid_argument("TruncationSpec: size must be positive");
  if (spec.guarantee_level < 0)
    throw std::invalid_argument("TruncationSpec: guarantee_level must be nonnegative");
  if (spec.size < spec.guarantee_level + 2)
    throw std::invalid_argument("TruncationSpec: size must be at least guarantee_level + 2 (got size " +
                                std::to_string(spec.size) + ", guarantee " +
                                std::to_string(spec.guarantee_level) + ")");
}

}  // namespace

ProductionMatrix from_rule(const SuccessionRule& rule, const TruncationSpec& spec) {
  validate_trunc(spec);
  int g = spec.guarantee_level;
  auto in_window = [g](const Label& l) {
    return l.value <= g + 2 && (!l.subscript || *l.subscript <= g);
  };
  if (!in_window(rule.axiom))
    throw std::invalid_argument("from_rule: axiom outside the truncation window");

  // Breadth-first window discovery.
  std::vector<Label> order = {rule.axiom};
  std::map<Label, int> index = {{rule.axiom, 0}};
  std::deque<Label> queue = {rule.axiom};
  bool exact = true;
  while (!queue.empty()) {
    Label l = queue.front();
    queue.pop_front();
    for (const Label& s : rule.produce(l)) {
      if (!in_window(s)) {
        exact = false;
        continue;
      }
      if (index.emplace(s, static_cast<int>(order.size())).second) {
        order.push_back(s);
        queue.push_back(s);
      }
    }
  }
  if (static_cast<int>(order.size()) > spec.size)
    throw std::invalid_argument("from_rule: truncation size " + std::to_string(spec.size) +
                                " too small for rule " + rule.id + "; need at least " +
                                std::to_string(order.size()));

  ProductionMatrix pm;
  pm.labels = order;
  pm.axiom_index = 0;
  pm.exact = exact;
  pm.guarantee_level = g;
  pm.m = Matrix(static_cast<int>(order.size()));
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    for (const Label& s : rule.produce(order[static_cast<size_t>(i)]))
      if (auto it = index.find(s); it != index.end()) pm.m.at(i, it->second) += CheckedInt(1);
  return pm;
}

CountSeries matrix_counts(const ProductionMatrix& pm, int n_max) {
  if (n_max < 0) throw std::invalid_argument("matrix_counts: n_max must be nonnegative");
  if (!pm.exact && n_max > pm.guarantee_level)
    throw std::invalid_argument("matrix_counts: n_max " + std::to_string(n_max) +
                                " exceeds the truncation guarantee level " +
                                std::to_string(pm.guarantee_level));
  std::vector<CheckedInt> r(static_cast<size_t>(pm.m.size()));
  r.at(static_cast<size_t>(pm.axiom_index)) = 1;
  CountSeries out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0;; ++n) {
    CheckedInt total = 0;
    for (const CheckedInt& v : r) total += v;
    out.push_back(total);
    if (n == n_max) break;
    r = pav::apply(r, pm.m);
  }
  return out;
}

namespace {

// One block step: grow M (size s) to size s+1 via [[0, u^T], [0, M + e u^T]]
// with u^T = (1,0,...,0) and e the all-ones column.
Matrix block_step(const Matrix& m) {
  int s = m.size();
  Matrix out(s + 1);
  out.at(0, 1) = 1;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) out.at(i + 1, j + 1) = m.at(i, j) + CheckedInt(j == 0 ? 1 : 0);
  return out;
}

std::vector<Label> plain_labels(int count) {
  std::vector<Label> labels;
  labels.reserve(static_cast<size_t>(count));
  for (int v = 1; v <= count; ++v) labels.push_back(Label{v, std::nullopt});
  return labels;
}

}  // namespace

ProductionMatrix pk_block_recursion(int k) {
  if (k < 2) throw std::domain_error("pk_block_recursion: k must be >= 2");
  Matrix m(1);
  m.at(0, 0) = 1;
  for (int step = 1; step < k; ++step) m = block_step(m);
  ProductionMatrix pm;
  pm.m = std::move(m);
  pm.labels = plain_labels(k);
  pm.axiom_index = 0;
  pm.exact = true;  // the rule behind it closes with k labels
  pm.guarantee_level = 0;
  return pm;
}

ProductionMatrix mk_block_recursion(int k, const TruncationSpec& spec) {
  if (k < 4) throw std::domain_error("mk_block_recursion: k must be >= 4");
  validate_trunc(spec);
  int dim = spec.guarantee_level + 2;  // the window labels are (1)..(g+2)
  int base_dim = dim - (k - 3);
  if (base_dim < 2)
    throw std::invalid_argument("mk_block_recursion: truncation too small for k = " + std::to_string(k) +
                                "; need guarantee_level >= " + std::to_string(k - 3));

  // Base case: the production matrix of the k = 3 rule, (h) -> (2)^(h-1)(h+1),
  // truncated to base_dim labels.
  Matrix m(base_dim);
  for (int i = 0; i < base_dim; ++i) {
    int h = i + 1;
    if (h >= 2) m.at(i, 1) += CheckedInt(h - 1);
    if (h + 1 <= base_dim) m.at(i, h) += CheckedInt(1);
  }
  for (int step = 0; step < k - 3; ++step) m = block_step(m);

  ProductionMatrix pm;
  pm.m = std::move(m);
  pm.labels = plain_labels(dim);
  pm.axiom_index = 0;
  pm.exact = false;
  pm.guarantee_level = spec.guarantee_level;
  return pm;
}

}  // namespace pav
