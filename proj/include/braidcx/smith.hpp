#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace braidcx {

/// Arbitrary-precision integer used by every exact computation.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = DenseMatrix<Integer>;

template <typename Scalar>
struct SmithResult {
  /// Nonzero diagonal entries d1 | d2 | ... | dr, all positive.
  std::vector<Scalar> diagonal;
  Eigen::Index rank = 0;
  /// When requested: unimodular U, V with U * M * V = diag(diagonal, 0).
  std::optional<DenseMatrix<Scalar>> left;
  std::optional<DenseMatrix<Scalar>> right;
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Scalar>
void swap_rows(DenseMatrix<Scalar>& a, std::optional<DenseMatrix<Scalar>>& u, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  a.row(i).swap(a.row(j));
  if (u) u->row(i).swap(u->row(j));
}

template <typename Scalar>
void swap_cols(DenseMatrix<Scalar>& a, std::optional<DenseMatrix<Scalar>>& v, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  a.col(i).swap(a.col(j));
  if (v) v->col(i).swap(v->col(j));
}

// row(i) -= q * row(j)
template <typename Scalar>
void add_row(DenseMatrix<Scalar>& a, std::optional<DenseMatrix<Scalar>>& u, Eigen::Index i, Eigen::Index j,
             const Scalar& q) {
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    if (a(j, c) != Scalar(0)) a(i, c) -= q * a(j, c);
  if (u)
    for (Eigen::Index c = 0; c < u->cols(); ++c)
      if ((*u)(j, c) != Scalar(0)) (*u)(i, c) -= q * (*u)(j, c);
}

// col(i) -= q * col(j)
template <typename Scalar>
void add_col(DenseMatrix<Scalar>& a, std::optional<DenseMatrix<Scalar>>& v, Eigen::Index i, Eigen::Index j,
             const Scalar& q) {
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    if (a(r, j) != Scalar(0)) a(r, i) -= q * a(r, j);
  if (v)
    for (Eigen::Index r = 0; r < v->rows(); ++r)
      if ((*v)(r, j) != Scalar(0)) (*v)(r, i) -= q * (*v)(r, j);
}

}  // namespace detail

/// Smith normal form by fraction-free elimination with smallest-magnitude pivots.
template <typename Scalar>
SmithResult<Scalar> smith_normal_form(DenseMatrix<Scalar> a, bool with_transforms = false) {
  using detail::abs_value;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  SmithResult<Scalar> out;
  if (with_transforms) {
    out.left = DenseMatrix<Scalar>::Identity(rows, rows);
    out.right = DenseMatrix<Scalar>::Identity(cols, cols);
  }
  const Scalar zero(0);
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    bool exhausted = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pr = -1, pc = -1;
      Scalar best;
      for (Eigen::Index c = t; c < cols; ++c)
        for (Eigen::Index r = t; r < rows; ++r)
          if (a(r, c) != zero && (pr < 0 || abs_value(a(r, c)) < best)) {
            best = abs_value(a(r, c));
            pr = r;
            pc = c;
          }
      if (pr < 0) {
        exhausted = true;
        break;
      }
      detail::swap_rows(a, out.left, t, pr);
      detail::swap_cols(a, out.right, t, pc);
      bool clean = true;
      for (Eigen::Index r = t + 1; r < rows; ++r)
        if (a(r, t) != zero) {
          const Scalar q = a(r, t) / a(t, t);
          detail::add_row(a, out.left, r, t, q);
          if (a(r, t) != zero) clean = false;
        }
      for (Eigen::Index c = t + 1; c < cols; ++c)
        if (a(t, c) != zero) {
          const Scalar q = a(t, c) / a(t, t);
          detail::add_col(a, out.right, c, t, q);
          if (a(t, c) != zero) clean = false;
        }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and retry.
      Eigen::Index bad = -1;
      for (Eigen::Index r = t + 1; r < rows && bad < 0; ++r)
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != zero) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      detail::add_row(a, out.left, t, bad, Scalar(-1));
    }
    if (exhausted) break;
    if (a(t, t) < zero) {
      a.row(t) *= Scalar(-1);
      if (out.left) out.left->row(t) *= Scalar(-1);
    }
    out.diagonal.push_back(a(t, t));
    out.rank = t + 1;
  }
  return out;
}

}  // namespace braidcx
