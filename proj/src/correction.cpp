// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include "gamma_mitig/correction.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace gamma_mitig {

std::string_view to_string(CorrectionMethod method) {
  return method == CorrectionMethod::Inverse ? "inverse" : "least_squares";
}

std::string_view to_string(CorrectionPolicy policy) {
  switch (policy) {
    case CorrectionPolicy::InverseOnly: return "inverse";
    case CorrectionPolicy::LeastSquaresOnly: return "lsq";
    case CorrectionPolicy::InverseThenFallback: return "fallback";
  }
  return "fallback";
}

CorrectionMethod parse_correction_method(std::string_view name) {
  if (name == "inverse") return CorrectionMethod::Inverse;
  if (name == "least_squares") return CorrectionMethod::LeastSquares;
  throw Error(ErrorCode::Parse, "unknown correction method '" + std::string(name) + "'");
}

CorrectionPolicy parse_correction_policy(std::string_view name) {
  if (name == "inverse") return CorrectionPolicy::InverseOnly;
  if (name == "lsq") return CorrectionPolicy::LeastSquaresOnly;
  if (name == "fallback") return CorrectionPolicy::InverseThenFallback;
  throw Error(ErrorCode::InvalidConfig, "unknown correction policy '" + std::string(name) + "' (inverse|lsq|fallback)");
}

namespace {

void require_width(const ResponseMatrix& g, const ProbabilityDistribution& noisy) {
  if (g.dim() != noisy.size()) throw Error(ErrorCode::DimensionMismatch, "distribution width does not match response matrix");
}

double residual_of(const ResponseMatrix& g, const RealVector& p, const ProbabilityDistribution& noisy) {
  return (g.entries() * p - noisy.probs()).norm();
}

QuasiDistribution invert_with(const ResponseMatrix& g, const ProbabilityDistribution& noisy, double cond, const CorrectionOptions& opts) {
  if (!(cond <= opts.singular_cutoff)) {
    throw Error(ErrorCode::SingularGamma, "condition estimate " + std::to_string(cond) + " exceeds cutoff", cond);
  }
  RealVector raw = g.entries().fullPivLu().solve(noisy.probs());
  return QuasiDistribution::from_vector(std::move(raw), opts.norm_tol);
}

}  // namespace

double condition_estimate(const ResponseMatrix& g) {
  Eigen::BDCSVD<RealMatrix> svd(g.entries());
  const auto& s = svd.singularValues();
  const double smallest = s(s.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smallest;
}

QuasiDistribution invert_correct(const ResponseMatrix& g, const ProbabilityDistribution& noisy, const CorrectionOptions& opts) {
  require_width(g, noisy);
  return invert_with(g, noisy, condition_estimate(g), opts);
}

ProbabilityDistribution lsq_correct(const ResponseMatrix& g, const ProbabilityDistribution& noisy, const CorrectionOptions& opts) {
  require_width(g, noisy);
  auto solved = solve_simplex_lsq(g.entries(), noisy.probs(), opts.lsq);
  return ProbabilityDistribution::from_vector(std::move(solved.solution), opts.norm_tol);
}

CorrectionReport correct(const ResponseMatrix& g, const ProbabilityDistribution& noisy, CorrectionPolicy policy,
                         const CorrectionOptions& opts) {
  require_width(g, noisy);
  const double cond = condition_estimate(g);

  auto least_squares = [&](std::optional<QuasiDistribution> raw) {
    auto p = lsq_correct(g, noisy, opts);
    const double residual = residual_of(g, p.probs(), noisy);
    return CorrectionReport{std::move(p), CorrectionMethod::LeastSquares, std::move(raw), residual, cond};
  };

  if (policy == CorrectionPolicy::LeastSquaresOnly) return least_squares(std::nullopt);

  const bool singular = !(cond <= opts.singular_cutoff);
  if (singular) {
    if (policy == CorrectionPolicy::InverseOnly) invert_with(g, noisy, cond, opts);  // throws SingularGamma
    return least_squares(std::nullopt);
  }

  auto raw = invert_with(g, noisy, cond, opts);
  if (!raw.is_physical(opts.negativity_tol)) {
    if (policy == CorrectionPolicy::InverseOnly) {
      throw Error(ErrorCode::NegativeProbability, "inverse correction is unphysical (min entry " + std::to_string(raw.min_entry()) + ")",
                  -raw.min_entry());
    }
    return least_squares(std::move(raw));
  }

  RealVector clamped = raw.probs().cwiseMax(0.0);
  clamped /= clamped.sum();
  auto p = ProbabilityDistribution::from_vector(std::move(clamped), opts.norm_tol);
  const double residual = residual_of(g, p.probs(), noisy);
  return CorrectionReport{std::move(p), CorrectionMethod::Inverse, std::move(raw), residual, cond};
}

}  // namespace gamma_mitig
