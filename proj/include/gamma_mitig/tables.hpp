// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

// Regenerates the published single-qubit results from the bundled fixtures
// and the Monte-Carlo harness, side by side with the printed values.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gamma_mitig/correction.hpp"
#include "gamma_mitig/fixtures.hpp"
#include "gamma_mitig/json_io.hpp"
#include "gamma_mitig/simulation.hpp"

namespace gamma_mitig::tables {

struct CorrectedZRow {
  fixtures::CorrectedZCell published;
  double t_corrected;
  double gamma_corrected;
  CorrectionMethod t_method;
  CorrectionMethod gamma_method;
  double gamma_raw_inverse_z;  // <Z> of Gamma^{-1} p_raw, physical or not
};

struct ZeroStateRow {
  std::string label;
  double t_corrected;
  double gamma_corrected;
  double gst;  // Tr(rho_0 Z) of the fixture state
  double published_t;
  double published_gamma;
  double published_gst;
};

struct SimulationRow {
  fixtures::AccuracyRow published;
  SimConfig config;
  SimResult result;

  // sqrt(published sem^2 + run sem^2)
  double combined_sem() const;
  double z_score() const;
};

struct TablesOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 7;
  bool simulations = true;
  bool parallel = true;
};

struct TablesReport {
  std::vector<CorrectedZRow> corrected_z;
  std::vector<ZeroStateRow> zero_state;
  std::vector<SimulationRow> shots;
  std::vector<SimulationRow> tilt;
  std::optional<SimulationRow> sampled_gamma;
};

// Corrects the raw distribution of every (qubit, state) cell with the
// fixture T and Gamma using the inverse-then-least-squares policy.
std::vector<CorrectedZRow> reproduce_corrected_z();
std::vector<ZeroStateRow> reproduce_zero_state(const std::vector<CorrectedZRow>& corrected);

// Per-row configurations. Each row gets its own seed derived from the base
// seed; the sampled-gamma run reuses the 32k row's seed so that only the
// response matrix differs between the two.
SimConfig shots_row_config(std::size_t row, const TablesOptions& opts);
SimConfig tilt_row_config(std::size_t row, const TablesOptions& opts);
SimConfig sampled_gamma_config(const TablesOptions& opts);

TablesReport reproduce_tables(const TablesOptions& opts);

io::Json to_json(const TablesReport& report);
std::string to_markdown(const TablesReport& report);

// Writes tables.json and tables.md into out_dir (created if missing).
void write_tables(const TablesReport& report, const std::filesystem::path& out_dir, bool overwrite);

}  // namespace gamma_mitig::tables
