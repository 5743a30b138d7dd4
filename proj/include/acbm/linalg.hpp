#ifndef ACBM_LINALG_HPP
#define ACBM_LINALG_HPP

#include <optional>
#include <vector>

#include "acbm/rational.hpp"

namespace acbm {

// Dense matrix over exact rationals; everything here is exact.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_symmetric() const;
  QMatrix transposed() const;
  QMatrix operator*(const QMatrix& o) const;
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Cofactor expansion; matrix must be square.
Rational determinant(const QMatrix& m);

// Inverse via adjugate / determinant; nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

int rank(const QMatrix& m);

// Sylvester inertia (positive count, negative count) of a symmetric matrix,
// by exact symmetric congruence elimination. Zero-diagonal blocks are handled
// with the row+column addition pivot trick.
std::pair<int, int> inertia(QMatrix s);

// One solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(QMatrix m, std::vector<Rational> b);

// Indices of a maximal independent subset of the columns.
std::vector<int> column_basis(QMatrix m);

}  // namespace acbm

#endif
