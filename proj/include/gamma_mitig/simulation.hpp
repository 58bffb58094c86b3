// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

// Monte-Carlo estimate of single-qubit <Z> correction accuracy under shot
// noise, a sampled response matrix, and frame tilt of the readout POVM.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "gamma_mitig/channel.hpp"
#include "gamma_mitig/correction.hpp"
#include "gamma_mitig/error.hpp"
#include "gamma_mitig/qstate.hpp"
#include "gamma_mitig/rng.hpp"

namespace gamma_mitig {

// Excited-state leak of the reference biased POVM E_0 = diag(1, 0.05).
inline constexpr double kReferenceLeak = 0.05;

enum class GammaSource { Exact, SampledT };

std::string_view to_string(GammaSource source);

struct SimConfig {
  std::uint64_t trials = 1000;
  std::uint64_t shots = 32000;
  double eta = 0.0;  // frame tilt
  std::uint64_t seed = 0;
  GammaSource gamma_source = GammaSource::Exact;
  std::uint64_t shots_t = 0;  // samples per response-matrix column for SampledT

  bool random_eta_sign = true;   // false: every trial uses +eta
  bool exact_counts = false;     // infinite-shot limit: skip sampling
  bool fallback_policy = false;  // correct with InverseThenFallback instead of least squares
  bool keep_per_trial = false;
  bool parallel = true;
};

// Throws InvalidConfig unless trials >= 1, shots >= 1, |eta| < 0.5 and
// shots_t >= 1 when sampling the response matrix.
void validate(const SimConfig& cfg);

struct SimResult {
  double mean_dz = 0.0;
  double sem = 0.0;  // sample standard deviation / sqrt(trials)
  std::uint64_t trials = 0;
  std::vector<double> per_trial;
};

// Raised when a trial fails; `partial()` aggregates the trials that finished.
class SimulationAborted : public Error {
 public:
  SimulationAborted(ErrorCode cause, const std::string& what, SimResult partial)
      : Error(cause, what), partial_(std::move(partial)) {}
  const SimResult& partial() const noexcept { return partial_; }

 private:
  SimResult partial_;
};

// rho = (I + r . sigma) / 2.
DensityMatrix bloch_state(const Eigen::Vector3d& r);

// Uniform over the Bloch ball (rejection from the enclosing cube).
DensityMatrix sample_bloch_ball(Rng& rng);

// E_0 = diag(1, leak), E_1 = diag(0, 1 - leak).
Povm biased_qubit_povm(double leak = kReferenceLeak);

// E_0 = [[1, eta], [eta, leak]], E_1 = [[0, -eta], [-eta, 1 - leak]]. For
// eta != 0 E_1 has an O(eta^2) negative eigenvalue; it is accepted at the
// ingest PSD tolerance.
Povm tilted_qubit_povm(double eta, double leak = kReferenceLeak);

// Born rule p(x) = Tr(E_x rho). Values below zero (only reachable for POVMs
// accepted with a loose PSD tolerance) are clipped and the result renormalized.
ProbabilityDistribution forward_probs(const Povm& povm, const DensityMatrix& rho);

// Empirical frequencies of `shots` categorical draws from p.
ProbabilityDistribution sample_counts(const ProbabilityDistribution& p, std::uint64_t shots, Rng& rng);

// Response matrix whose columns are empirical frequencies of `shots` draws
// from each column of `exact` (perfect preparation of each classical state).
ResponseMatrix sample_response(const ResponseMatrix& exact, std::uint64_t shots, Rng& rng);

SimResult run_accuracy_sim(const SimConfig& cfg);
SimResult run_sampled_gamma_sim(const SimConfig& cfg);
SimResult run_tilt_sim(const SimConfig& cfg);

}  // namespace gamma_mitig
