// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include "gamma_mitig/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "gamma_mitig/kernels.hpp"

namespace gamma_mitig {

std::string_view to_string(GammaSource source) { return source == GammaSource::Exact ? "exact" : "sampled_t"; }

void validate(const SimConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be >= 1");
  if (cfg.shots < 1) throw Error(ErrorCode::InvalidConfig, "shots must be >= 1");
  if (!(std::abs(cfg.eta) < 0.5)) throw Error(ErrorCode::InvalidConfig, "|eta| must be < 0.5");
  if (cfg.gamma_source == GammaSource::SampledT && cfg.shots_t < 1) {
    throw Error(ErrorCode::InvalidConfig, "shots_t must be >= 1 when sampling the response matrix");
  }
}

DensityMatrix bloch_state(const Eigen::Vector3d& r) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  m << 1.0 + r.z(), r.x() - i * r.y(),
       r.x() + i * r.y(), 1.0 - r.z();
  return validate_density(0.5 * m);
}

DensityMatrix sample_bloch_ball(Rng& rng) {
  Eigen::Vector3d r;
  do {
    r = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
  } while (r.squaredNorm() > 1.0);
  return bloch_state(r);
}

Povm biased_qubit_povm(double leak) { return tilted_qubit_povm(0.0, leak); }

Povm tilted_qubit_povm(double eta, double leak) {
  ComplexMatrix e0(2, 2), e1(2, 2);
  e0 << 1.0, eta,
        eta, leak;
  e1 << 0.0, -eta,
        -eta, 1.0 - leak;
  ToleranceSet tol = ToleranceSet::strict();
  if (eta != 0.0) tol.psd = ToleranceSet::ingest().psd;
  return validate_povm({e0, e1}, tol);
}

ProbabilityDistribution forward_probs(const Povm& povm, const DensityMatrix& rho) {
  if (povm.dim() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "state and POVM dimensions differ");
  RealVector p(povm.size());
  const ComplexMatrix rho_t = rho.matrix().transpose();
  for (Index x = 0; x < povm.size(); ++x) p(x) = povm[x].cwiseProduct(rho_t).sum().real();
  if (p.minCoeff() < 0.0) {
    p = p.cwiseMax(0.0);
    p /= p.sum();
  }
  return ProbabilityDistribution::from_vector(std::move(p), 1e-9);
}

namespace {

RealVector empirical_frequencies(const RealVector& probs, std::uint64_t shots, Rng& rng) {
  const Index d = probs.size();
  std::vector<double> cdf(static_cast<std::size_t>(d));
  double acc = 0.0;
  Index last_positive = 0;
  for (Index x = 0; x < d; ++x) {
    acc += probs(x);
    cdf[static_cast<std::size_t>(x)] = acc;
    if (probs(x) > 0.0) last_positive = x;
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(d), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform01(rng);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const Index x = it == cdf.end() ? last_positive : static_cast<Index>(it - cdf.begin());
    ++counts[static_cast<std::size_t>(x)];
  }
  RealVector freq(d);
  for (Index x = 0; x < d; ++x) freq(x) = static_cast<double>(counts[static_cast<std::size_t>(x)]) / static_cast<double>(shots);
  return freq;
}

}  // namespace

ProbabilityDistribution sample_counts(const ProbabilityDistribution& p, std::uint64_t shots, Rng& rng) {
  if (shots < 1) throw Error(ErrorCode::InvalidConfig, "shots must be >= 1");
  return ProbabilityDistribution::from_vector(empirical_frequencies(p.probs(), shots, rng), 1e-9);
}

ResponseMatrix sample_response(const ResponseMatrix& exact, std::uint64_t shots, Rng& rng) {
  if (shots < 1) throw Error(ErrorCode::InvalidConfig, "shots must be >= 1");
  RealMatrix m(exact.dim(), exact.dim());
  for (Index c = 0; c < exact.dim(); ++c) m.col(c) = empirical_frequencies(exact.entries().col(c), shots, rng);
  return ResponseMatrix::from_entries(exact.kind(), std::move(m));
}

namespace {

SimResult aggregate(const std::vector<double>& dz, const std::vector<unsigned char>& ok, bool keep) {
  SimResult r;
  double sum = 0.0;
  for (std::size_t i = 0; i < dz.size(); ++i) {
    if (ok[i] == 0) continue;
    sum += dz[i];
    ++r.trials;
    if (keep) r.per_trial.push_back(dz[i]);
  }
  if (r.trials == 0) return r;
  r.mean_dz = sum / static_cast<double>(r.trials);
  if (r.trials > 1) {
    double ss = 0.0;
    for (std::size_t i = 0; i < dz.size(); ++i) {
      if (ok[i] != 0) ss += (dz[i] - r.mean_dz) * (dz[i] - r.mean_dz);
    }
    const double sigma = std::sqrt(ss / static_cast<double>(r.trials - 1));
    r.sem = sigma / std::sqrt(static_cast<double>(r.trials));
  }
  return r;
}

SimResult run_trials(const SimConfig& cfg) {
  validate(cfg);
  const Povm reference = biased_qubit_povm();
  const ResponseMatrix gamma = gamma_from_povm(reference);
  std::optional<Povm> tilt_plus, tilt_minus;
  if (cfg.eta != 0.0) {
    tilt_plus = tilted_qubit_povm(cfg.eta);
    tilt_minus = tilted_qubit_povm(-cfg.eta);
  }

  const auto trials = static_cast<std::size_t>(cfg.trials);
  std::vector<double> dz(trials, 0.0);
  std::vector<unsigned char> ok(trials, 0);
  std::vector<std::string> failure(trials);
  std::vector<ErrorCode> failure_code(trials, ErrorCode::NonConvergence);

  auto trial = [&](std::size_t i) {
    try {
      Rng state_rng = trial_rng(cfg.seed, i, Stream::State);
      const DensityMatrix rho = sample_bloch_ball(state_rng);
      const double z_exact = (rho.matrix()(0, 0) - rho.matrix()(1, 1)).real();

      const Povm* povm = &reference;
      if (tilt_plus) {
        bool negative = false;
        if (cfg.random_eta_sign) {
          Rng sign_rng = trial_rng(cfg.seed, i, Stream::Sign);
          negative = (sign_rng() >> 63) != 0;
        }
        povm = negative ? &*tilt_minus : &*tilt_plus;
      }

      const ProbabilityDistribution exact = forward_probs(*povm, rho);
      std::optional<ProbabilityDistribution> sampled;
      if (!cfg.exact_counts) {
        Rng shot_rng = trial_rng(cfg.seed, i, Stream::Shots);
        sampled = sample_counts(exact, cfg.shots, shot_rng);
      }
      const ProbabilityDistribution& noisy = sampled ? *sampled : exact;

      std::optional<ResponseMatrix> estimated;
      if (cfg.gamma_source == GammaSource::SampledT) {
        Rng gamma_rng = trial_rng(cfg.seed, i, Stream::Gamma);
        estimated = sample_response(gamma, cfg.shots_t, gamma_rng);
      }
      const ResponseMatrix& g = estimated ? *estimated : gamma;

      const ProbabilityDistribution corrected =
          cfg.fallback_policy ? correct(g, noisy, CorrectionPolicy::InverseThenFallback).corrected : lsq_correct(g, noisy);
      dz[i] = std::abs(pauli_z_expectation(corrected) - z_exact);
      ok[i] = 1;
    } catch (const Error& e) {
      failure[i] = e.what();
      failure_code[i] = e.code();
    } catch (const std::exception& e) {
      failure[i] = e.what();
    }
  };

  if (cfg.parallel) {
    kernels::omp::for_each_index(trials, trial);
  } else {
    kernels::serial::for_each_index(trials, trial);
  }

  SimResult result = aggregate(dz, ok, cfg.keep_per_trial);
  for (std::size_t i = 0; i < trials; ++i) {
    if (ok[i] == 0) {
      throw SimulationAborted(failure_code[i], "trial " + std::to_string(i) + " failed: " + failure[i], std::move(result));
    }
  }
  return result;
}

}  // namespace

SimResult run_accuracy_sim(const SimConfig& cfg) {
  if (cfg.eta != 0.0) throw Error(ErrorCode::InvalidConfig, "accuracy simulation requires eta = 0");
  if (cfg.gamma_source != GammaSource::Exact) throw Error(ErrorCode::InvalidConfig, "accuracy simulation uses the exact response matrix");
  return run_trials(cfg);
}

SimResult run_sampled_gamma_sim(const SimConfig& cfg) {
  if (cfg.eta != 0.0) throw Error(ErrorCode::InvalidConfig, "sampled-gamma simulation requires eta = 0");
  return run_trials(cfg);
}

SimResult run_tilt_sim(const SimConfig& cfg) {
  if (cfg.gamma_source != GammaSource::Exact) throw Error(ErrorCode::InvalidConfig, "tilt simulation uses the exact diagonal-model response matrix");
  return run_trials(cfg);
}

}  // namespace gamma_mitig
