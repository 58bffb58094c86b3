// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>

#include "gamma_mitig/channel.hpp"
#include "gamma_mitig/qstate.hpp"
#include "gamma_mitig/simplex_lsq.hpp"

namespace gamma_mitig {

enum class CorrectionMethod { Inverse, LeastSquares };
enum class CorrectionPolicy { InverseOnly, LeastSquaresOnly, InverseThenFallback };

std::string_view to_string(CorrectionMethod method);
std::string_view to_string(CorrectionPolicy policy);
CorrectionMethod parse_correction_method(std::string_view name);
// Accepts "inverse", "lsq" and "fallback".
CorrectionPolicy parse_correction_policy(std::string_view name);

struct CorrectionOptions {
  double singular_cutoff = 1e12;  // 2-norm condition number
  double negativity_tol = 1e-10;  // inverse entries above -tol are clamped to 0
  double norm_tol = 1e-9;
  SimplexLsqOptions lsq{};
};

struct CorrectionReport {
  ProbabilityDistribution corrected;
  CorrectionMethod method;
  std::optional<QuasiDistribution> raw_inverse;
  double residual;  // |Gamma corrected - noisy|_2
  double condition_estimate;
};

// sigma_max / sigma_min; +inf for exactly singular matrices.
double condition_estimate(const ResponseMatrix& g);

// Gamma^{-1} p_noisy. Column sums of Gamma are one, so the result sums to one
// but may be negative. Throws SingularGamma above the condition cutoff.
QuasiDistribution invert_correct(const ResponseMatrix& g, const ProbabilityDistribution& noisy, const CorrectionOptions& opts = {});

// Closest physical distribution in the 2-norm fit |Gamma p - p_noisy|.
ProbabilityDistribution lsq_correct(const ResponseMatrix& g, const ProbabilityDistribution& noisy, const CorrectionOptions& opts = {});

CorrectionReport correct(const ResponseMatrix& g, const ProbabilityDistribution& noisy,
                         CorrectionPolicy policy = CorrectionPolicy::InverseThenFallback, const CorrectionOptions& opts = {});

}  // namespace gamma_mitig
