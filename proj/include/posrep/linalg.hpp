#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <utility>

#include "posrep/rational.hpp"

namespace posrep {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

// Exact elimination routines. Eigen's decompositions pick pivots by magnitude
// against a tolerance, which is meaningless for exact scalars; these pick the
// first nonzero entry instead.

/// Row-reduces a copy of `m` and returns its rank.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  const Scalar zero(0);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < a.rows(); ++r) {
      if (a(r, col) != zero) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < a.rows(); ++r) {
      if (a(r, col) == zero) continue;
      Scalar f = a(r, col) / a(rank, col);
      a.row(r) -= f * a.row(rank);
    }
    ++rank;
  }
  return rank;
}

/// Gauss-Jordan inverse. Returns nullopt for singular input.
template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> exact_inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_inverse: matrix not square");
  const Eigen::Index n = m.rows();
  const Scalar zero(0);
  Matrix<Scalar> a = m;
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (a(r, col) != zero) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    a.row(pivot).swap(a.row(col));
    inv.row(pivot).swap(inv.row(col));
    Scalar p = a(col, col);
    a.row(col) /= p;
    inv.row(col) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == zero) continue;
      Scalar f = a(r, col);
      a.row(r) -= f * a.row(col);
      inv.row(r) -= f * inv.row(col);
    }
  }
  return inv;
}

/// Determinant by elimination.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_determinant: matrix not square");
  Matrix<Scalar> a = m;
  const Scalar zero(0);
  Scalar det(1);
  for (Eigen::Index col = 0; col < a.rows(); ++col) {
    Eigen::Index pivot = col;
    while (pivot < a.rows() && a(pivot, col) == zero) ++pivot;
    if (pivot == a.rows()) return zero;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < a.rows(); ++r) {
      if (a(r, col) == zero) continue;
      Scalar f = a(r, col) / a(col, col);
      a.row(r) -= f * a.row(col);
    }
  }
  return det;
}

template <typename Derived>
MatrixQ to_rational(const Eigen::MatrixBase<Derived>& m) {
  MatrixQ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(static_cast<std::int64_t>(m(i, j)));
  return out;
}

}  // namespace posrep
