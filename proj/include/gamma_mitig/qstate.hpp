// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

// Domain types for n-qubit readout: density matrices, POVMs and probability
// distributions over bitstrings, together with the validation predicates that
// construct them.
//
// Bit ordering is big-endian throughout: qubit 0 is the most significant bit
// of the canonical index, so |x_0 x_1 ... x_{n-1}> = |x_0> (x) |x_1> (x) ...

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gamma_mitig/error.hpp"
#include "gamma_mitig/tolerance.hpp"

namespace gamma_mitig {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr int kMaxQubits = 12;

// Returns n for dim = 2^n (n >= 1, n <= kMaxQubits); throws BadDimension.
int qubits_for_dim(Index dim);

inline constexpr Index dim_for_qubits(int n) { return Index{1} << n; }

class BitString {
 public:
  BitString(int width, std::uint64_t index);

  // Parses "0110"; the first character is qubit 0.
  static BitString parse(std::string_view text);

  int width() const noexcept { return width_; }
  std::uint64_t index() const noexcept { return index_; }
  bool bit(int qubit) const;
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  int width_;
  std::uint64_t index_;
};

class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int qubits() const noexcept { return qubits_; }
  Index dim() const noexcept { return matrix_.rows(); }

  // Diagonal of rho in the classical basis, i.e. the ideal readout
  // distribution <x|rho|x>.
  RealVector populations() const;

  static DensityMatrix classical(const BitString& x);
  static DensityMatrix maximally_mixed(int n);

 private:
  friend DensityMatrix validate_density(const ComplexMatrix&, const ToleranceSet&);
  DensityMatrix(ComplexMatrix m, int n) : matrix_(std::move(m)), qubits_(n) {}

  ComplexMatrix matrix_;
  int qubits_;
};

DensityMatrix validate_density(const ComplexMatrix& m, const ToleranceSet& tol = ToleranceSet::strict());

class Povm {
 public:
  int qubits() const noexcept { return qubits_; }
  Index size() const noexcept { return static_cast<Index>(elements_.size()); }
  Index dim() const noexcept { return dim_for_qubits(qubits_); }

  // Elements in canonical label order: element x is the noisy version of
  // the projector |x><x|.
  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  const ComplexMatrix& operator[](Index x) const { return elements_.at(static_cast<std::size_t>(x)); }

  // Projective measurement in the classical basis.
  static Povm ideal(int n);

 private:
  friend Povm validate_povm(std::vector<ComplexMatrix>, const ToleranceSet&);
  Povm(std::vector<ComplexMatrix> e, int n) : elements_(std::move(e)), qubits_(n) {}

  std::vector<ComplexMatrix> elements_;
  int qubits_;
};

// Checks Hermiticity, PSD and completeness of every element, then assigns
// each element to the classical projector nearest in Frobenius norm. The
// assignment must be a bijection; the result is reordered to label order.
Povm validate_povm(std::vector<ComplexMatrix> elements, const ToleranceSet& tol = ToleranceSet::strict());

// Max over elements of |offdiag(E)|_F / |E|_F. Zero iff the POVM is a biased
// measurement model (all elements diagonal in the classical basis).
double diagonality_score(const Povm& povm);

namespace detail {

// Shared storage for vectors indexed by bitstring.
class DistributionBase {
 public:
  int qubits() const noexcept { return qubits_; }
  Index size() const noexcept { return probs_.size(); }
  const RealVector& probs() const noexcept { return probs_; }
  double operator[](Index x) const { return probs_(x); }
  double sum() const { return probs_.sum(); }

  friend bool operator==(const DistributionBase& a, const DistributionBase& b) {
    return a.qubits_ == b.qubits_ && a.probs_ == b.probs_;
  }

 protected:
  DistributionBase(RealVector p, int n) : probs_(std::move(p)), qubits_(n) {}

  RealVector probs_;
  int qubits_;
};

}  // namespace detail

// Entries in [0, 1] summing to one.
class ProbabilityDistribution : public detail::DistributionBase {
 public:
  // Throws NegativeProbability or NotNormalized when the vector is outside
  // the simplex by more than `tol_norm`.
  static ProbabilityDistribution from_vector(RealVector p, double tol_norm = ToleranceSet::strict().norm);

  static ProbabilityDistribution point_mass(const BitString& x);
  static ProbabilityDistribution uniform(int n);

 private:
  using DistributionBase::DistributionBase;
};

// Sums to one but may hold negative entries: the raw output of an exact
// inverse correction.
class QuasiDistribution : public detail::DistributionBase {
 public:
  static QuasiDistribution from_vector(RealVector p, double tol_norm = ToleranceSet::strict().norm);

  double min_entry() const { return probs_.minCoeff(); }
  bool is_physical(double tol) const { return min_entry() >= -tol; }

 private:
  using DistributionBase::DistributionBase;
};

// <Z> = p(0) - p(1) for a one-qubit distribution; throws WrongWidth otherwise.
double pauli_z_expectation(const ProbabilityDistribution& p);
double pauli_z_expectation(const QuasiDistribution& p);

// <Z_q> of the marginal on `qubit` for an n-qubit distribution.
double pauli_z_expectation(const ProbabilityDistribution& p, int qubit);

}  // namespace gamma_mitig
