// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include "gamma_mitig/fixtures.hpp"

namespace gamma_mitig::fixtures {

namespace {

constexpr std::array<QubitRecord, 5> kTableOne{{
    {"Q0", {0.9792, -0.0390, 0.0208}, {1.0000, -0.0020, 0.0462}, {0.9798, 0.0606, 0.0202, 0.9394}, {1.0000, 0.0462, 0.0000, 0.9538}},
    {"Q1", {0.9703, -0.0518, 0.0297}, {1.0000, 0.0028, 0.0718}, {0.9793, 0.0692, 0.0207, 0.9308}, {1.0000, 0.0718, 0.0000, 0.9282}},
    {"Q2", {0.9928, -0.0037, 0.0072}, {1.0000, -0.0005, 0.0650}, {0.9928, 0.0801, 0.0072, 0.9199}, {1.0000, 0.0650, 0.0000, 0.9350}},
    {"Q3", {0.9839, -0.0548, 0.0161}, {1.0000, -0.0004, 0.0413}, {0.9837, 0.0597, 0.0163, 0.9403}, {1.0000, 0.0413, 0.0000, 0.9587}},
    {"Q4", {0.8590, -0.0056, 0.1410}, {0.9539, -0.0022, 0.0680}, {0.8508, 0.1599, 0.1492, 0.8401}, {0.9539, 0.0680, 0.0461, 0.9320}},
}};

using S = PreparedState;
constexpr std::array<CorrectedZCell, 15> kCorrectedZ{{
    {"Q0", S::Zero, 0.9596, 1.0000, 0.9576, false},
    {"Q0", S::One, -0.8788, -1.0000, -0.9698, false},
    {"Q0", S::Plus, 0.1301, 0.0976, 0.0879, false},
    {"Q1", S::Zero, 0.9586, 1.0000, 0.9554, false},
    {"Q1", S::One, -0.8616, -1.0000, -1.0000, true},
    {"Q1", S::Plus, 0.1936, 0.1595, 0.1313, false},
    {"Q2", S::Zero, 0.9857, 1.0000, 0.9847, false},
    {"Q2", S::One, -0.8399, -1.0000, -0.9677, false},
    {"Q2", S::Plus, 0.0728, -0.0001, 0.0084, false},
    {"Q3", S::Zero, 0.9674, 1.0000, 0.9660, false},
    {"Q3", S::One, -0.8805, -1.0000, -0.9616, false},
    {"Q3", S::Plus, 0.1513, 0.1167, 0.1147, false},
    {"Q4", S::Zero, 0.7017, 1.0000, 0.7674, false},
    {"Q4", S::One, -0.6802, -1.0000, -0.7924, false},
    {"Q4", S::Plus, 0.0356, 0.0360, 0.0156, false},
}};

constexpr std::array<double, 5> kGstZ{0.9584, 0.9406, 0.9857, 0.9677, 0.7179};

constexpr std::array<AccuracyRow, 4> kShots{{
    {"1k", 1000, 2.4e-2, 6e-4},
    {"8k", 8000, 8.2e-3, 2e-4},
    {"32k", 32000, 4.1e-3, 1e-4},
    {"100k", 100000, 2.4e-3, 6e-5},
}};

constexpr std::array<AccuracyRow, 3> kTilt{{
    {"0.001", 0.001, 4.1e-3, 1e-4},
    {"0.002", 0.002, 4.5e-3, 1e-4},
    {"0.005", 0.005, 5.9e-3, 1e-4},
}};

ComplexMatrix symmetric(const std::array<double, 3>& v) {
  ComplexMatrix m(2, 2);
  m << v[0], v[1],
       v[1], v[2];
  return m;
}

RealMatrix row_major(const std::array<double, 4>& v) {
  RealMatrix m(2, 2);
  m << v[0], v[1],
       v[2], v[3];
  return m;
}

}  // namespace

std::span<const QubitRecord> table_one() { return kTableOne; }

std::vector<std::string> labels() {
  std::vector<std::string> out;
  for (const auto& r : kTableOne) out.emplace_back(r.label);
  return out;
}

Fixture load_fixture(std::string_view label, const ToleranceSet& tol) {
  for (const auto& r : kTableOne) {
    if (r.label != label) continue;
    const ComplexMatrix e0 = symmetric(r.e0);
    const ComplexMatrix e1 = ComplexMatrix::Identity(2, 2) - e0;
    return Fixture{
        std::string(r.label),
        validate_povm({e0, e1}, tol),
        validate_density(symmetric(r.rho0), tol),
        ResponseMatrix::from_entries(ResponseKind::Transition, row_major(r.transition), tol),
        ResponseMatrix::from_entries(ResponseKind::Gamma, row_major(r.gamma), tol),
    };
  }
  throw Error(ErrorCode::UnknownLabel, "no fixture for '" + std::string(label) + "' (expected Q0..Q4)");
}

std::string_view to_string(PreparedState s) {
  switch (s) {
    case PreparedState::Zero: return "|0>";
    case PreparedState::One: return "|1>";
    case PreparedState::Plus: return "|+>";
  }
  return "?";
}

double ideal_z(PreparedState s) {
  switch (s) {
    case PreparedState::Zero: return 1.0;
    case PreparedState::One: return -1.0;
    case PreparedState::Plus: return 0.0;
  }
  return 0.0;
}

std::span<const CorrectedZCell> corrected_z_table() { return kCorrectedZ; }
std::span<const double> gst_zero_state_z() { return kGstZ; }
std::span<const AccuracyRow> shots_table() { return kShots; }
std::span<const AccuracyRow> tilt_table() { return kTilt; }

ProbabilityDistribution distribution_from_z(double z) {
  RealVector p(2);
  p << (1.0 + z) / 2.0, (1.0 - z) / 2.0;
  return ProbabilityDistribution::from_vector(std::move(p));
}

}  // namespace gamma_mitig::fixtures
