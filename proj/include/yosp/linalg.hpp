#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "yosp/errors.hpp"
#include "yosp/rational.hpp"

namespace yosp {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar>;

using Mat = Matrix<Rational>;
using Vec = Vector<Rational>;
using SpMat = SparseMatrix<Rational>;

/// Exact zero test; Eigen's isZero() is tolerance based.
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename Scalar>
bool is_zero(const SparseMatrix<Scalar>& m) {
  for (Index k = 0; k < m.outerSize(); ++k)
    for (typename SparseMatrix<Scalar>::InnerIterator it(m, k); it; ++it)
      if (it.value() != 0) return false;
  return true;
}

/// Drops explicitly stored zeros.
template <typename Scalar>
void prune(SparseMatrix<Scalar>& m) {
  m.prune([](const Index&, const Index&, const Scalar& v) { return v != 0; });
}

template <typename Scalar>
SparseMatrix<Scalar> to_sparse(const Matrix<Scalar>& m) {
  std::vector<Eigen::Triplet<Scalar>> trips;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) trips.emplace_back(i, j, m(i, j));
  SparseMatrix<Scalar> s(m.rows(), m.cols());
  s.setFromTriplets(trips.begin(), trips.end());
  return s;
}

template <typename Scalar>
SparseMatrix<Scalar> sparse_identity(Index n) {
  SparseMatrix<Scalar> s(n, n);
  s.setIdentity();
  return s;
}

/// Reduced row echelon form together with its pivot columns.
template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Scalar>
RowEchelon<Scalar> rref(Matrix<Scalar> a) {
  RowEchelon<Scalar> out;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.row(piv).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Scalar f = a(i, col);
      for (Index j = col; j < a.cols(); ++j)
        if (a(row, j) != 0) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  a.conservativeResize(row, a.cols());
  out.reduced = std::move(a);
  return out;
}

template <typename Scalar>
Index rank(const Matrix<Scalar>& a) {
  return rref(a).rank();
}

/// Basis of the right kernel as columns; free variables are set to 1 in turn.
template <typename Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& a) {
  const auto e = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(a.cols(), a.cols() - e.rank());
  Index k = 0;
  for (Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = Scalar(1);
    for (Index r = 0; r < e.rank(); ++r) basis(e.pivots[static_cast<std::size_t>(r)], k) = -e.reduced(r, f);
    ++k;
  }
  return basis;
}

template <typename Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw SingularMatrix("inverse of a non-square matrix");
  const Index n = a.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug << a, Matrix<Scalar>::Identity(n, n);
  const auto e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw SingularMatrix("matrix is not invertible");
  return e.reduced.rightCols(n);
}

/// Incrementally grown basis kept in semi-echelon form: each stored vector
/// has a unit pivot that is zero in every later vector.
template <typename Scalar>
class EchelonBasis {
 public:
  explicit EchelonBasis(Index dim) : dim_(dim) {}

  Index dim() const { return dim_; }
  Index size() const { return static_cast<Index>(pivots_.size()); }

  /// Residual of v after reduction by the stored vectors.
  Vector<Scalar> reduce(Vector<Scalar> v) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Scalar c = v(pivots_[i]);
      if (c != 0) v -= c * reduced_[i];
    }
    return v;
  }

  bool contains(const Vector<Scalar>& v) const { return is_zero(reduce(v)); }

  /// Adds v if independent; returns whether it was added.
  bool insert(const Vector<Scalar>& v) {
    Vector<Scalar> r = reduce(v);
    Index p = 0;
    while (p < dim_ && r(p) == 0) ++p;
    if (p == dim_) return false;
    const Scalar lead = r(p);
    r /= lead;
    pivots_.push_back(p);
    reduced_.push_back(std::move(r));
    return true;
  }

 private:
  Index dim_;
  std::vector<Index> pivots_;
  std::vector<Vector<Scalar>> reduced_;
};

}  // namespace yosp
