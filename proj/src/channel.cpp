// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include "gamma_mitig/channel.hpp"

#include <cmath>
#include <string>

#include "gamma_mitig/kernels.hpp"

namespace gamma_mitig {

namespace {
constexpr int kParallelKronQubits = 8;
}

std::string_view to_string(ResponseKind kind) { return kind == ResponseKind::Gamma ? "gamma" : "transition"; }

ResponseKind parse_response_kind(std::string_view name) {
  if (name == "gamma") return ResponseKind::Gamma;
  if (name == "transition") return ResponseKind::Transition;
  throw Error(ErrorCode::Parse, "unknown response matrix kind '" + std::string(name) + "'");
}

ResponseMatrix ResponseMatrix::from_entries(ResponseKind kind, RealMatrix entries, const ToleranceSet& tol, bool clamp_entries) {
  if (entries.rows() != entries.cols()) throw Error(ErrorCode::BadDimension, "response matrix is not square");
  if (!entries.allFinite()) throw Error(ErrorCode::NotFinite, "response matrix has non-finite entries");
  const int n = qubits_for_dim(entries.rows());

  const double lo = entries.minCoeff();
  const double hi = entries.maxCoeff();
  if (lo < -tol.norm) throw Error(ErrorCode::NotStochastic, "entry " + std::to_string(lo) + " is negative", -lo);
  if (hi > 1.0 + tol.norm) throw Error(ErrorCode::NotStochastic, "entry " + std::to_string(hi) + " exceeds one", hi - 1.0);
  if (clamp_entries) entries = entries.cwiseMax(0.0).cwiseMin(1.0);

  const double col_dev = (entries.colwise().sum().array() - 1.0).abs().maxCoeff();
  if (col_dev > tol.norm) {
    throw Error(ErrorCode::NotStochastic, "column sums deviate from one by " + std::to_string(col_dev), col_dev);
  }
  return ResponseMatrix(kind, std::move(entries), n);
}

ProbabilityDistribution ResponseMatrix::apply(const ProbabilityDistribution& p) const {
  if (p.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "distribution width does not match response matrix");
  RealVector out = entries_ * p.probs();
  return ProbabilityDistribution::from_vector(std::move(out), 1e-9);
}

ResponseMatrix gamma_from_povm(const Povm& povm) {
  const Index d = povm.dim();
  RealMatrix g(d, d);
  for (Index x = 0; x < d; ++x) g.row(x) = povm[x].diagonal().real().transpose();
  return ResponseMatrix(ResponseKind::Gamma, std::move(g), povm.qubits());
}

ResponseMatrix transition_from_model(const Povm& povm, std::span<const DensityMatrix> prepared) {
  const Index d = povm.dim();
  if (static_cast<Index>(prepared.size()) != d) {
    throw Error(ErrorCode::DimensionMismatch, "need " + std::to_string(d) + " prepared states, got " + std::to_string(prepared.size()));
  }
  RealMatrix t(d, d);
  for (Index xp = 0; xp < d; ++xp) {
    const auto& rho = prepared[static_cast<std::size_t>(xp)];
    if (rho.dim() != d) throw Error(ErrorCode::DimensionMismatch, "prepared state dimension does not match POVM");
    for (Index x = 0; x < d; ++x) {
      // Tr(E rho) = sum_ij E_ij rho_ji
      t(x, xp) = (povm[x].cwiseProduct(rho.matrix().transpose())).sum().real();
    }
  }
  return ResponseMatrix(ResponseKind::Transition, std::move(t), povm.qubits());
}

ResponseMatrix tensor_compose(std::span<const ResponseMatrix> factors) {
  if (factors.empty()) throw Error(ErrorCode::BadDimension, "tensor_compose needs at least one factor");
  int total = 0;
  for (const auto& f : factors) {
    if (f.kind() != factors.front().kind()) throw Error(ErrorCode::MixedKinds, "cannot compose gamma and transition factors");
    total += f.qubits();
  }
  if (total > kMaxQubits) {
    throw Error(ErrorCode::TooLarge, "composed width " + std::to_string(total) + " exceeds " + std::to_string(kMaxQubits) + " qubits");
  }

  RealMatrix acc = factors.front().entries();
  int width = factors.front().qubits();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    width += factors[k].qubits();
    acc = width >= kParallelKronQubits ? kernels::omp::kron(acc, factors[k].entries())
                                       : kernels::serial::kron(acc, factors[k].entries());
  }
  return ResponseMatrix(factors.front().kind(), std::move(acc), total);
}

StochasticityReport stochasticity_report(const ResponseMatrix& m) {
  const auto& e = m.entries();
  return {
      .column_deviation = (e.colwise().sum().array() - 1.0).abs().maxCoeff(),
      .row_deviation = (e.rowwise().sum().array() - 1.0).abs().maxCoeff(),
      .min_entry = e.minCoeff(),
  };
}

}  // namespace gamma_mitig
