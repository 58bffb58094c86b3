// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

// Bundled single-qubit tomography estimates for the five qubits of the IBM Q
// device ibmq_essex (prepared |0> state, E_0, concurrently measured T, and
// Gamma, all as printed to four decimals), plus the published <Z> values
// used as regression targets.

#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gamma_mitig/channel.hpp"
#include "gamma_mitig/qstate.hpp"

namespace gamma_mitig::fixtures {

inline constexpr std::string_view kDevice = "ibmq_essex";

// Printed values. Symmetric 2x2 matrices as {a00, a01, a11}; response
// matrices row-major {r00, r01, r10, r11}.
struct QubitRecord {
  std::string_view label;
  std::array<double, 3> rho0;
  std::array<double, 3> e0;
  std::array<double, 4> transition;
  std::array<double, 4> gamma;
};

std::span<const QubitRecord> table_one();
std::vector<std::string> labels();

struct Fixture {
  std::string label;
  Povm povm;  // E_1 = I - E_0
  DensityMatrix rho0;
  ResponseMatrix transition;
  ResponseMatrix gamma;  // as printed
};

// Throws UnknownLabel for labels outside Q0..Q4.
Fixture load_fixture(std::string_view label, const ToleranceSet& tol = ToleranceSet::ingest());

enum class PreparedState { Zero, One, Plus };

std::string_view to_string(PreparedState s);
double ideal_z(PreparedState s);

// Published <Z> for one (qubit, state) cell: raw data and after T- and
// Gamma-matrix correction.
struct CorrectedZCell {
  std::string_view label;
  PreparedState state;
  double raw;
  double t_corrected;
  double gamma_corrected;
  bool gamma_used_least_squares;
};

std::span<const CorrectedZCell> corrected_z_table();

// <Z> of the tomographic |0> estimate, one per qubit in label order.
std::span<const double> gst_zero_state_z();

// Published Monte-Carlo rows: parameter (shots or |eta|), mean and sem.
struct AccuracyRow {
  std::string_view label;
  double parameter;
  double mean_dz;
  double sem;
};

std::span<const AccuracyRow> shots_table();
std::span<const AccuracyRow> tilt_table();

// Unphysical <Z> of the raw inverse for Q1 |1>.
inline constexpr double kQ1OneRawInverseZ = -1.0056;

// Raw one-qubit distribution with p(0) = (1 + z) / 2.
ProbabilityDistribution distribution_from_z(double z);

}  // namespace gamma_mitig::fixtures
