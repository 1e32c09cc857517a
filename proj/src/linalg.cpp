#include "adjalg/linalg.hpp"

#include <algorithm>
#include <map>

namespace adjalg {

std::vector<int> rref_in_place(Mat& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int r = row; r < rows; ++r) {
      if (!m(r, col).is_zero()) { sel = r; break; }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    Cyc inv = m(row, col).inverse();
    for (int c = col; c < cols; ++c) {
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    }
    for (int r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Cyc f = m(r, col);
      for (int c = col; c < cols; ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const Mat& m) {
  Mat copy = m;
  return static_cast<int>(rref_in_place(copy).size());
}

Mat nullspace(const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref_in_place(r);
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis = zeros(cols, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis(f, static_cast<int>(k)) = Cyc(1);
    for (size_t i = 0; i < pivots.size(); ++i) {
      if (!r(static_cast<int>(i), f).is_zero())
        basis(pivots[i], static_cast<int>(k)) = -r(static_cast<int>(i), f);
    }
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& rhs) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  Mat aug = zeros(rows, cols + 1);
  aug.block(0, 0, rows, cols) = m;
  aug.col(cols) = rhs;
  std::vector<int> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x = Vec::Constant(cols, Cyc(0));
  for (size_t i = 0; i < pivots.size(); ++i)
    x(pivots[i]) = aug(static_cast<int>(i), cols);
  return x;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out = zeros(static_cast<int>(a.rows() * b.rows()),
                  static_cast<int>(a.cols() * b.cols()));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) {
          if (b(k, l).is_zero()) continue;
          out(static_cast<int>(i * b.rows() + k),
              static_cast<int>(j * b.cols() + l)) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

bool same_span(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) return false;
  Mat joint = zeros(static_cast<int>(a.rows()), static_cast<int>(a.cols() + b.cols()));
  joint.block(0, 0, a.rows(), a.cols()) = a;
  joint.block(0, a.cols(), b.rows(), b.cols()) = b;
  int ra = rank(a), rb = rank(b), rj = rank(joint);
  return ra == rb && rb == rj;
}

std::optional<Vec> coordinates(const Mat& basis, const Vec& v) {
  return solve(basis, v);
}

std::optional<Mat> inverse(const Mat& m) {
  int n = static_cast<int>(m.rows());
  if (m.cols() != n) return std::nullopt;
  Mat aug = zeros(n, 2 * n);
  aug.block(0, 0, n, n) = m;
  aug.block(0, n, n, n) = identity(n);
  std::vector<int> pivots = rref_in_place(aug);
  /* a pivot in the augmented half means the left block ran out of rank */
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots[n - 1] >= n))
    return std::nullopt;
  return Mat(aug.block(0, n, n, n));
}

Mat identity(int n) {
  Mat m = zeros(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Cyc(1);
  return m;
}

Mat zeros(int rows, int cols) { return Mat::Constant(rows, cols, Cyc(0)); }

Vec unit_vec(int n, int i) {
  Vec v = Vec::Constant(n, Cyc(0));
  v(i) = Cyc(1);
  return v;
}

void SparseReducer::reduce(SparseRow& row) const {
  std::map<int, Cyc> work;
  for (auto& [c, v] : row) {
    if (v.is_zero()) continue;
    auto [it, fresh] = work.emplace(c, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) work.erase(it);
    }
  }
  auto it = work.begin();
  while (it != work.end()) {
    int col = it->first;
    auto pit = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    if (pit == pivots_.end() || *pit != col) { ++it; continue; }
    size_t idx = static_cast<size_t>(pit - pivots_.begin());
    Cyc coeff = it->second;
    it = work.erase(it);
    /* stored rows are inter-reduced, so this touches no pivot column */
    for (size_t k = 1; k < rows_[idx].size(); ++k) {
      const auto& [c2, v2] = rows_[idx][k];
      auto [jt, fresh] = work.emplace(c2, -(coeff * v2));
      if (!fresh) {
        jt->second -= coeff * v2;
        if (jt->second.is_zero()) {
          if (jt == it) ++it;
          work.erase(jt);
        }
      }
    }
    /* erased/inserted entries lie at columns >= col, so the iterator
       still walks every remaining candidate */
    it = work.lower_bound(col);
  }
  row.assign(work.begin(), work.end());
}

void SparseReducer::add_row(SparseRow row) {
  reduce(row);
  if (row.empty()) return;
  int piv = row[0].first;
  Cyc inv = row[0].second.inverse();
  for (auto& [c, v] : row) v *= inv;
  auto pit = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  size_t pos = static_cast<size_t>(pit - pivots_.begin());
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(row));
  /* restore inter-reduction: clear the new pivot column elsewhere */
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i == pos) continue;
    auto& r = rows_[i];
    auto entry = std::lower_bound(
        r.begin(), r.end(), piv,
        [](const std::pair<int, Cyc>& e, int c) { return e.first < c; });
    if (entry == r.end() || entry->first != piv) continue;
    Cyc coeff = entry->second;
    std::map<int, Cyc> work(r.begin(), r.end());
    work.erase(piv);
    for (size_t k = 0; k < rows_[pos].size(); ++k) {
      if (k == 0) continue;
      const auto& [c2, v2] = rows_[pos][k];
      auto [jt, fresh] = work.emplace(c2, -(coeff * v2));
      if (!fresh) {
        jt->second -= coeff * v2;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
    r.assign(work.begin(), work.end());
  }
}

std::vector<int> SparseReducer::pivot_columns() const { return pivots_; }

Vec SparseReducer::reduce_dense(Vec v) const {
  /* stored rows are inter-reduced with pivot coefficient 1, so one
     subtraction per row clears its pivot for good */
  for (size_t i = 0; i < rows_.size(); ++i) {
    Cyc coeff = v(pivots_[i]);
    if (coeff.is_zero()) continue;
    for (const auto& [c, val] : rows_[i]) v(c) -= coeff * val;
  }
  return v;
}

QuotientSpace::QuotientSpace(SparseReducer relations)
    : red_(std::move(relations)) {
  std::vector<bool> is_pivot(red_.cols(), false);
  for (int p : red_.pivot_columns()) is_pivot[p] = true;
  for (int c = 0; c < red_.cols(); ++c)
    if (!is_pivot[c]) free_.push_back(c);
}

Vec QuotientSpace::project(const Vec& v) const {
  Vec w = red_.reduce_dense(v);
  Vec out = Vec::Constant(dim(), Cyc(0));
  for (int k = 0; k < dim(); ++k) out(k) = w(free_[k]);
  return out;
}

Vec QuotientSpace::lift(int i) const { return unit_vec(ambient(), free_[i]); }

Mat SparseReducer::nullspace_basis() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots_) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis = zeros(cols_, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis(f, static_cast<int>(k)) = Cyc(1);
    for (size_t i = 0; i < rows_.size(); ++i) {
      auto entry = std::lower_bound(
          rows_[i].begin(), rows_[i].end(), f,
          [](const std::pair<int, Cyc>& e, int c) { return e.first < c; });
      if (entry != rows_[i].end() && entry->first == f)
        basis(pivots_[i], static_cast<int>(k)) = -entry->second;
    }
  }
  return basis;
}

}  // namespace adjalg
