// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

// Markov response matrices for readout. Entry (x, x') is the probability of
// reading x given the true (Gamma) or prepared (Transition) classical state x'.

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gamma_mitig/qstate.hpp"

namespace gamma_mitig {

enum class ResponseKind { Gamma, Transition };

std::string_view to_string(ResponseKind kind);
ResponseKind parse_response_kind(std::string_view name);

class ResponseMatrix {
 public:
  // Validates a left-stochastic matrix: entries in [0, 1] and unit column
  // sums, both within tol.norm. With `clamp_entries` (file ingestion only)
  // entries within tolerance of [0, 1] are clipped onto it.
  static ResponseMatrix from_entries(ResponseKind kind, RealMatrix entries, const ToleranceSet& tol = ToleranceSet::strict(),
                                     bool clamp_entries = false);

  int qubits() const noexcept { return qubits_; }
  Index dim() const noexcept { return entries_.rows(); }
  ResponseKind kind() const noexcept { return kind_; }
  const RealMatrix& entries() const noexcept { return entries_; }
  double operator()(Index x, Index x_prime) const { return entries_(x, x_prime); }

  // Forward action on a distribution over the true states.
  ProbabilityDistribution apply(const ProbabilityDistribution& p) const;

  friend bool operator==(const ResponseMatrix& a, const ResponseMatrix& b) {
    return a.kind_ == b.kind_ && a.qubits_ == b.qubits_ && a.entries_ == b.entries_;
  }

 private:
  friend ResponseMatrix gamma_from_povm(const Povm&);
  friend ResponseMatrix transition_from_model(const Povm&, std::span<const DensityMatrix>);
  friend ResponseMatrix tensor_compose(std::span<const ResponseMatrix>);
  ResponseMatrix(ResponseKind kind, RealMatrix m, int n) : entries_(std::move(m)), kind_(kind), qubits_(n) {}

  RealMatrix entries_;
  ResponseKind kind_;
  int qubits_;
};

// Gamma(x|x') = Tr(E_x |x'><x'|) = <x'|E_x|x'>. Off-diagonal content of the
// POVM is ignored here; diagonality_score measures it.
ResponseMatrix gamma_from_povm(const Povm& povm);

// T(x|x') = Tr(E_x rho_x') for noisy preparations rho_x', one per classical
// state in label order.
ResponseMatrix transition_from_model(const Povm& povm, std::span<const DensityMatrix> prepared);

// Kronecker product in qubit order (first factor holds the most significant
// qubits). Uses the OpenMP kernel once the product reaches 8 qubits.
ResponseMatrix tensor_compose(std::span<const ResponseMatrix> factors);

struct StochasticityReport {
  double column_deviation;  // max |column sum - 1|
  double row_deviation;     // max |row sum - 1|
  double min_entry;

  bool left_stochastic(double tol) const { return column_deviation <= tol && min_entry >= -tol; }
  bool doubly_stochastic(double tol) const { return left_stochastic(tol) && row_deviation <= tol; }
};

StochasticityReport stochasticity_report(const ResponseMatrix& m);

}  // namespace gamma_mitig
