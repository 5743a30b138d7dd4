#include "acbm/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace acbm {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

namespace {

QMatrix minor_of(const QMatrix& m, int row, int col) {
  QMatrix r(m.rows() - 1, m.cols() - 1);
  for (int i = 0, ri = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (int j = 0, rj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      r.at(ri, rj) = m.at(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

}  // namespace

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  int n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  Rational det(0);
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    Rational c = m.at(0, j) * determinant(minor_of(m, 0, j));
    det += (j % 2 == 0) ? c : -c;
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  int n = m.rows();
  Rational det = determinant(m);
  if (det.is_zero()) return std::nullopt;
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = determinant(minor_of(m, j, i));
      inv.at(i, j) = ((i + j) % 2 == 0 ? c : -c) / det;
    }
  return inv;
}

int rank(const QMatrix& m) {
  QMatrix a = m;
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(pivot, j));
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, col).is_zero()) continue;
      Rational f = a.at(i, col) / a.at(r, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

std::pair<int, int> inertia(QMatrix s) {
  if (!s.is_symmetric()) throw std::invalid_argument("inertia: matrix not symmetric");
  int n = s.rows();
  int pos = 0, neg = 0;
  auto swap_rc = [&](int i, int j) {
    for (int k = 0; k < n; ++k) std::swap(s.at(i, k), s.at(j, k));
    for (int k = 0; k < n; ++k) std::swap(s.at(k, i), s.at(k, j));
  };
  auto add_rc = [&](int i, int j) {  // row_i += row_j, col_i += col_j
    for (int k = 0; k < n; ++k) s.at(i, k) += s.at(j, k);
    for (int k = 0; k < n; ++k) s.at(k, i) += s.at(k, j);
  };
  for (int k = 0; k < n; ++k) {
    if (s.at(k, k).is_zero()) {
      int d = -1;
      for (int i = k + 1; i < n && d < 0; ++i)
        if (!s.at(i, i).is_zero()) d = i;
      if (d >= 0) {
        swap_rc(k, d);
      } else {
        int oi = -1, oj = -1;
        for (int i = k; i < n && oi < 0; ++i)
          for (int j = i + 1; j < n && oi < 0; ++j)
            if (!s.at(i, j).is_zero()) {
              oi = i;
              oj = j;
            }
        if (oi < 0) break;  // remaining block is zero
        add_rc(oi, oj);     // puts 2*s_ij on the diagonal
        if (oi != k) swap_rc(k, oi);
      }
    }
    Rational pivot = s.at(k, k);
    if (pivot.sign() > 0)
      ++pos;
    else
      ++neg;
    for (int i = k + 1; i < n; ++i) {
      if (s.at(i, k).is_zero()) continue;
      Rational f = s.at(i, k) / pivot;
      for (int j = 0; j < n; ++j) s.at(i, j) -= f * s.at(k, j);
      for (int j = 0; j < n; ++j) s.at(j, i) -= f * s.at(j, k);
    }
  }
  return {pos, neg};
}

std::optional<std::vector<Rational>> solve(QMatrix m, std::vector<Rational> b) {
  if (int(b.size()) != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  int rows = m.rows(), cols = m.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    std::swap(b[r], b[pivot]);
    Rational d = m.at(r, col);
    for (int j = 0; j < cols; ++j) m.at(r, j) /= d;
    b[r] /= d;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (int j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

std::vector<int> column_basis(QMatrix m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<int> basis;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    for (int i = r + 1; i < rows; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col) / m.at(r, col);
      for (int j = col; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    basis.push_back(col);
    ++r;
  }
  return basis;
}

}  // namespace acbm
