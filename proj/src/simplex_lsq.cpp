// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include "gamma_mitig/simplex_lsq.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/QR>

namespace gamma_mitig {

namespace {

struct FaceSolution {
  RealVector p;  // full length, zero off the face
  bool rank_deficient = false;
};

// Minimizes |A p - b| over {p : p_i = 0 for i not in face, sum p = 1}.
FaceSolution solve_on_face(const RealMatrix& a, const RealVector& b, const std::vector<Index>& face) {
  const Index k = static_cast<Index>(face.size());
  FaceSolution out{RealVector::Zero(a.cols()), false};
  if (k == 1) {
    out.p(face.front()) = 1.0;
    return out;
  }

  RealMatrix a_face(a.rows(), k);
  for (Index j = 0; j < k; ++j) a_face.col(j) = a.col(face[static_cast<std::size_t>(j)]);

  // Orthonormal basis of {v : 1^T v = 0} from the Householder reflector that
  // maps 1 onto e_1: columns 2..k of Q.
  Eigen::HouseholderQR<RealMatrix> qr(RealMatrix::Ones(k, 1));
  const RealMatrix q = qr.householderQ() * RealMatrix::Identity(k, k);
  const RealMatrix basis = q.rightCols(k - 1);

  const RealVector center = RealVector::Constant(k, 1.0 / static_cast<double>(k));
  const RealMatrix reduced = a_face * basis;
  const RealVector rhs = b - a_face * center;

  Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(reduced);
  const RealVector y = cod.solve(rhs);
  out.rank_deficient = cod.rank() < k - 1;

  const RealVector p_face = center + basis * y;
  for (Index j = 0; j < k; ++j) out.p(face[static_cast<std::size_t>(j)]) = p_face(j);
  return out;
}

}  // namespace

SimplexLsqResult solve_simplex_lsq(const RealMatrix& a, const RealVector& b, const SimplexLsqOptions& opts) {
  const Index d = a.cols();
  if (d < 1 || a.rows() != b.size()) throw Error(ErrorCode::DimensionMismatch, "least-squares operands do not conform");
  const int cap = opts.max_iterations > 0 ? opts.max_iterations : static_cast<int>(100 * d);

  RealVector p = RealVector::Constant(d, 1.0 / static_cast<double>(d));
  std::vector<bool> on_face(static_cast<std::size_t>(d), true);
  SimplexLsqResult result;

  for (int iter = 1; iter <= cap; ++iter) {
    std::vector<Index> face;
    for (Index i = 0; i < d; ++i) {
      if (on_face[static_cast<std::size_t>(i)]) face.push_back(i);
    }
    const FaceSolution target = solve_on_face(a, b, face);
    result.degenerate = result.degenerate || target.rank_deficient;
    const RealVector step = target.p - p;

    // Ratio test: largest alpha in [0, 1] keeping p + alpha * step >= 0.
    double alpha = 1.0;
    Index blocking = -1;
    for (Index i : face) {
      if (step(i) < 0.0) {
        const double ratio = -p(i) / step(i);
        if (ratio < alpha) {
          alpha = ratio;
          blocking = i;
        }
      }
    }

    p += alpha * step;
    if (blocking >= 0) {
      p(blocking) = 0.0;
      on_face[static_cast<std::size_t>(blocking)] = false;
      continue;
    }
    p = target.p;

    // At the face minimizer. Stationarity: grad + mu * 1 - lambda = 0 with
    // lambda_i >= 0 for variables held at zero.
    const RealVector grad = a.transpose() * (a * p - b);
    double mu = 0.0;
    for (Index i : face) mu -= grad(i);
    mu /= static_cast<double>(face.size());

    Index release = -1;
    double worst = -opts.kkt_tol;
    for (Index i = 0; i < d; ++i) {
      if (on_face[static_cast<std::size_t>(i)]) continue;
      const double lambda = grad(i) + mu;
      if (lambda < worst) {
        worst = lambda;
        release = i;
      }
    }

    if (release < 0) {
      p = p.cwiseMax(0.0);
      p /= p.sum();
      result.solution = p;
      result.residual = (a * p - b).norm();
      result.iterations = iter;
      return result;
    }
    on_face[static_cast<std::size_t>(release)] = true;
  }

  p = p.cwiseMax(0.0);
  p /= p.sum();
  const double residual = (a * p - b).norm();
  throw NonConvergenceError("simplex least squares hit the iteration cap of " + std::to_string(cap), p, residual);
}

}  // namespace gamma_mitig
