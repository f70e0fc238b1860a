// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <utility>

#include <Eigen/Core>

#include "plm/errors.hpp"

namespace plm {

/// Solves A x = b for a small dense system by Gaussian elimination with
/// partial pivoting. The system is declared singular when a pivot falls below
/// `relative_tolerance` times the largest absolute entry of A.
template <typename Scalar, int N>
Eigen::Matrix<Scalar, N, 1> solve_partial_pivot(Eigen::Matrix<Scalar, N, N> a, Eigen::Matrix<Scalar, N, 1> b,
                                                Scalar relative_tolerance = Scalar(1e-12)) {
  using std::abs;
  const Scalar scale = a.cwiseAbs().maxCoeff();
  if (!(scale > Scalar(0)))
    throw SingularDesignError("normal equations are identically zero");
  const Scalar threshold = relative_tolerance * scale;

  for (int col = 0; col < N; ++col) {
    int pivot = col;
    for (int r = col + 1; r < N; ++r)
      if (abs(a(r, col)) > abs(a(pivot, col)))
        pivot = r;
    if (!(abs(a(pivot, col)) >= threshold))
      throw SingularDesignError("design matrix is rank deficient");
    if (pivot != col) {
      a.row(col).swap(a.row(pivot));
      std::swap(b(col), b(pivot));
    }
    for (int r = col + 1; r < N; ++r) {
      const Scalar factor = a(r, col) / a(col, col);
      a.row(r).tail(N - col) -= factor * a.row(col).tail(N - col);
      b(r) -= factor * b(col);
    }
  }

  Eigen::Matrix<Scalar, N, 1> x;
  for (int r = N - 1; r >= 0; --r) {
    Scalar acc = b(r);
    for (int c = r + 1; c < N; ++c)
      acc -= a(r, c) * x(c);
    x(r) = acc / a(r, r);
  }
  return x;
}

/// Ordinary least squares through the normal equations X^T X beta = X^T y.
template <typename Scalar, int N>
Eigen::Matrix<Scalar, N, 1> least_squares(const Eigen::Matrix<Scalar, Eigen::Dynamic, N>& design,
                                          const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y) {
  const Eigen::Matrix<Scalar, N, N> gram = design.transpose() * design;
  const Eigen::Matrix<Scalar, N, 1> rhs = design.transpose() * y;
  return solve_partial_pivot<Scalar, N>(gram, rhs);
}

} // namespace plm
