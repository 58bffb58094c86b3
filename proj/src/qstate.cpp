// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include "gamma_mitig/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace gamma_mitig {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPsd: return "NotPsd";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::IncompleteSum: return "IncompleteSum";
    case ErrorCode::ElementNotPsd: return "ElementNotPsd";
    case ErrorCode::AmbiguousLabeling: return "AmbiguousLabeling";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::WrongWidth: return "WrongWidth";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotStochastic: return "NotStochastic";
    case ErrorCode::MixedKinds: return "MixedKinds";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SingularGamma: return "SingularGamma";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

ToleranceProfile parse_tolerance_profile(std::string_view name) {
  if (name == "strict") return ToleranceProfile::Strict;
  if (name == "ingest") return ToleranceProfile::Ingest;
  throw Error(ErrorCode::InvalidConfig, "unknown tolerance profile '" + std::string(name) + "'");
}

int qubits_for_dim(Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw Error(ErrorCode::BadDimension, "dimension " + std::to_string(dim) + " is not a power of two >= 2");
  }
  int n = 0;
  while ((Index{1} << n) < dim) ++n;
  if (n > kMaxQubits) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " qubits exceeds the limit of " + std::to_string(kMaxQubits));
  }
  return n;
}

// ---------------------------------------------------------------------------
// BitString
// ---------------------------------------------------------------------------

BitString::BitString(int width, std::uint64_t index) : width_(width), index_(index) {
  if (width < 1 || width > 63) throw Error(ErrorCode::WrongWidth, "bitstring width must be in [1, 63]");
  if (index >= (std::uint64_t{1} << width)) {
    throw Error(ErrorCode::WrongWidth, "index " + std::to_string(index) + " does not fit in " + std::to_string(width) + " bits");
  }
}

BitString BitString::parse(std::string_view text) {
  if (text.empty() || text.size() > 63) throw Error(ErrorCode::Parse, "bad bitstring length");
  std::uint64_t index = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorCode::Parse, "bitstring '" + std::string(text) + "' has non-binary digit");
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitString(static_cast<int>(text.size()), index);
}

bool BitString::bit(int qubit) const {
  if (qubit < 0 || qubit >= width_) throw Error(ErrorCode::WrongWidth, "qubit index out of range");
  return ((index_ >> (width_ - 1 - qubit)) & 1U) != 0;
}

std::string BitString::to_string() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int q = 0; q < width_; ++q) {
    if (bit(q)) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Density matrices
// ---------------------------------------------------------------------------

namespace {

void require_square_finite(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::BadDimension, "matrix is not square");
  if (!m.allFinite()) throw Error(ErrorCode::NotFinite, "matrix has non-finite entries");
}

double hermitian_deviation(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

DensityMatrix validate_density(const ComplexMatrix& m, const ToleranceSet& tol) {
  require_square_finite(m);
  const int n = qubits_for_dim(m.rows());

  const double herm = hermitian_deviation(m);
  if (herm > tol.hermitian) throw Error(ErrorCode::NotHermitian, "max |rho - rho^dagger| = " + std::to_string(herm), herm);

  const double lambda_min = min_eigenvalue(m);
  if (lambda_min < -tol.psd) {
    throw Error(ErrorCode::NotPsd, "minimum eigenvalue " + std::to_string(lambda_min), -lambda_min);
  }

  const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol.trace) throw Error(ErrorCode::TraceNotOne, "|tr(rho) - 1| = " + std::to_string(trace_dev), trace_dev);

  return DensityMatrix(m, n);
}

RealVector DensityMatrix::populations() const { return matrix_.diagonal().real(); }

DensityMatrix DensityMatrix::classical(const BitString& x) {
  const Index d = dim_for_qubits(x.width());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(static_cast<Index>(x.index()), static_cast<Index>(x.index())) = 1.0;
  return validate_density(m);
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  const Index d = dim_for_qubits(n);
  return validate_density(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

// ---------------------------------------------------------------------------
// POVMs
// ---------------------------------------------------------------------------

Povm validate_povm(std::vector<ComplexMatrix> elements, const ToleranceSet& tol) {
  if (elements.empty()) throw Error(ErrorCode::BadDimension, "POVM has no elements");
  for (const auto& e : elements) require_square_finite(e);
  const Index d = elements.front().rows();
  const int n = qubits_for_dim(d);
  if (static_cast<Index>(elements.size()) != d) {
    throw Error(ErrorCode::BadDimension,
                "expected " + std::to_string(d) + " elements for " + std::to_string(n) + " qubits, got " + std::to_string(elements.size()));
  }
  for (const auto& e : elements) {
    if (e.rows() != d) throw Error(ErrorCode::DimensionMismatch, "POVM elements differ in dimension");
  }

  ComplexMatrix total = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const auto& e = elements[k];
    const double herm = hermitian_deviation(e);
    if (herm > tol.hermitian) {
      throw Error(ErrorCode::NotHermitian, "element " + std::to_string(k) + " deviates from Hermitian by " + std::to_string(herm), herm);
    }
    const double lambda_min = min_eigenvalue(e);
    if (lambda_min < -tol.psd) {
      throw Error(ErrorCode::ElementNotPsd, "element " + std::to_string(k) + " has eigenvalue " + std::to_string(lambda_min), -lambda_min);
    }
    total += e;
  }
  const double incompleteness = (total - ComplexMatrix::Identity(d, d)).norm();
  if (incompleteness > tol.complete) {
    throw Error(ErrorCode::IncompleteSum, "|sum E_x - I|_F = " + std::to_string(incompleteness), incompleteness);
  }

  // |E - |x><x| |_F^2 = |E|_F^2 - 2 Re E(x,x) + 1, so the nearest projector
  // maximizes the real diagonal entry.
  constexpr double kTie = 1e-12;
  std::vector<Index> label(elements.size());
  std::vector<int> owner(static_cast<std::size_t>(d), -1);
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const RealVector diag = elements[k].diagonal().real();
    Index best = 0;
    diag.maxCoeff(&best);
    for (Index x = 0; x < d; ++x) {
      if (x != best && diag(best) - diag(x) <= kTie) {
        throw Error(ErrorCode::AmbiguousLabeling,
                    "element " + std::to_string(k) + " is equidistant from projectors " + std::to_string(best) + " and " + std::to_string(x));
      }
    }
    auto& slot = owner[static_cast<std::size_t>(best)];
    if (slot != -1) {
      throw Error(ErrorCode::AmbiguousLabeling,
                  "elements " + std::to_string(slot) + " and " + std::to_string(k) + " are both nearest to projector " + std::to_string(best));
    }
    slot = static_cast<int>(k);
    label[k] = best;
  }

  std::vector<ComplexMatrix> ordered(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) ordered[static_cast<std::size_t>(label[k])] = std::move(elements[k]);
  return Povm(std::move(ordered), n);
}

Povm Povm::ideal(int n) {
  const Index d = dim_for_qubits(n);
  std::vector<ComplexMatrix> elements;
  elements.reserve(static_cast<std::size_t>(d));
  for (Index x = 0; x < d; ++x) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(x, x) = 1.0;
    elements.push_back(std::move(e));
  }
  return validate_povm(std::move(elements));
}

double diagonality_score(const Povm& povm) {
  double score = 0.0;
  for (const auto& e : povm.elements()) {
    const double total = e.norm();
    if (total == 0.0) continue;
    ComplexMatrix off = e;
    off.diagonal().setZero();
    score = std::max(score, off.norm() / total);
  }
  return score;
}

// ---------------------------------------------------------------------------
// Distributions
// ---------------------------------------------------------------------------

namespace {

void require_normalized(const RealVector& p, double tol_norm) {
  if (!p.allFinite()) throw Error(ErrorCode::NotFinite, "distribution has non-finite entries");
  const double dev = std::abs(p.sum() - 1.0);
  if (dev > tol_norm) throw Error(ErrorCode::NotNormalized, "|sum p - 1| = " + std::to_string(dev), dev);
}

double z_from_pair(const detail::DistributionBase& p) {
  if (p.qubits() != 1) throw Error(ErrorCode::WrongWidth, "<Z> needs a one-qubit distribution; pass a qubit index for marginals");
  return p[0] - p[1];
}

}  // namespace

ProbabilityDistribution ProbabilityDistribution::from_vector(RealVector p, double tol_norm) {
  const int n = qubits_for_dim(p.size());
  require_normalized(p, tol_norm);
  const double lowest = p.minCoeff();
  if (lowest < -tol_norm) throw Error(ErrorCode::NegativeProbability, "entry " + std::to_string(lowest) + " is negative", -lowest);
  // Round-off below zero is absorbed; anything larger was rejected above.
  p = p.cwiseMax(0.0);
  return ProbabilityDistribution(std::move(p), n);
}

ProbabilityDistribution ProbabilityDistribution::point_mass(const BitString& x) {
  RealVector p = RealVector::Zero(dim_for_qubits(x.width()));
  p(static_cast<Index>(x.index())) = 1.0;
  return ProbabilityDistribution(std::move(p), x.width());
}

ProbabilityDistribution ProbabilityDistribution::uniform(int n) {
  const Index d = dim_for_qubits(n);
  return ProbabilityDistribution(RealVector::Constant(d, 1.0 / static_cast<double>(d)), n);
}

QuasiDistribution QuasiDistribution::from_vector(RealVector p, double tol_norm) {
  const int n = qubits_for_dim(p.size());
  require_normalized(p, tol_norm);
  return QuasiDistribution(std::move(p), n);
}

double pauli_z_expectation(const ProbabilityDistribution& p) { return z_from_pair(p); }
double pauli_z_expectation(const QuasiDistribution& p) { return z_from_pair(p); }

double pauli_z_expectation(const ProbabilityDistribution& p, int qubit) {
  if (qubit < 0 || qubit >= p.qubits()) throw Error(ErrorCode::WrongWidth, "qubit " + std::to_string(qubit) + " out of range");
  const int shift = p.qubits() - 1 - qubit;
  double z = 0.0;
  for (Index x = 0; x < p.size(); ++x) {
    z += ((x >> shift) & 1) != 0 ? -p[x] : p[x];
  }
  return z;
}

}  // namespace gamma_mitig
