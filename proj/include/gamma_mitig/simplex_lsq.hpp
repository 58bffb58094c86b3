// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "gamma_mitig/error.hpp"
#include "gamma_mitig/qstate.hpp"

namespace gamma_mitig {

struct SimplexLsqOptions {
  int max_iterations = 0;  // 0 selects 100 * dim
  double kkt_tol = 1e-10;
};

struct SimplexLsqResult {
  RealVector solution;
  double residual = 0.0;  // |A p - b|_2
  int iterations = 0;
  bool degenerate = false;  // some face subproblem had a rank-deficient Hessian
};

// Thrown when the iteration cap is hit; carries the best feasible iterate.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, RealVector best, double residual)
      : Error(ErrorCode::NonConvergence, what, residual), best_(std::move(best)), residual_(residual) {}

  const RealVector& best() const noexcept { return best_; }
  double residual() const noexcept { return residual_; }

 private:
  RealVector best_;
  double residual_;
};

// argmin_p |A p - b|_2^2 subject to p >= 0 and sum(p) = 1.
//
// Primal active-set method started from the uniform distribution. Variables
// fixed at zero form the working set; on the remaining face the equality
// constrained subproblem is solved in the null space of 1^T with a minimum
// norm solve, so rank-deficient A (including singular response matrices)
// yields the minimum-norm optimum of that face. Ties in the ratio test and
// in multiplier selection go to the lowest index.
SimplexLsqResult solve_simplex_lsq(const RealMatrix& a, const RealVector& b, const SimplexLsqOptions& opts = {});

}  // namespace gamma_mitig
