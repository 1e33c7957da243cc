#ifndef RESCONV_LINALG_HPP_
#define RESCONV_LINALG_HPP_

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "resconv/rational.hpp"

namespace resconv {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

/// Reduced row echelon form over an exact field. Pivot columns are appended
/// to `pivots` when given.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived> &m,
                                           std::vector<Eigen::Index> *pivots = nullptr) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> a = m;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == Scalar(0)) ++p;
    if (p == a.rows()) continue;
    a.row(p).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == Scalar(0)) continue;
      const Scalar f = a(r, col);
      for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return a;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived> &m) {
  std::vector<Eigen::Index> pivots;
  rref(m, &pivots);
  return static_cast<Eigen::Index>(pivots.size());
}

/// Basis of {x : m x = 0}, one vector per column of the result.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived> &m) {
  using Scalar = typename Derived::Scalar;
  std::vector<Eigen::Index> pivots;
  const DenseMatrix<Scalar> r = rref(m, &pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Eigen::Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Zero(m.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    basis(f, static_cast<Eigen::Index>(k)) = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis(pivots[i], static_cast<Eigen::Index>(k)) = -r(static_cast<Eigen::Index>(i), f);
    }
  }
  return basis;
}

/// Some x with a x = b, or nullopt when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<DenseVector<typename DerivedA::Scalar>> solve_exact(const Eigen::MatrixBase<DerivedA> &a,
                                                                  const Eigen::MatrixBase<DerivedB> &b) {
  using Scalar = typename DerivedA::Scalar;
  DenseMatrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  std::vector<Eigen::Index> pivots;
  const DenseMatrix<Scalar> r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  DenseVector<Scalar> x = DenseVector<Scalar>::Zero(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = r(static_cast<Eigen::Index>(i), a.cols());
  return x;
}

}  // namespace resconv

#endif  // RESCONV_LINALG_HPP_
