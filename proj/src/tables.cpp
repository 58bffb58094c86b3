// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include "gamma_mitig/tables.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "gamma_mitig/rng.hpp"

namespace gamma_mitig::tables {

namespace {

constexpr std::uint64_t kShotsTable = 3;
constexpr std::uint64_t kTiltTable = 4;
constexpr std::size_t k32kRow = 2;

std::uint64_t row_seed(std::uint64_t base, std::uint64_t table, std::size_t row) {
  return splitmix64(splitmix64(base) ^ splitmix64(table * 64 + row));
}

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

}  // namespace

double SimulationRow::combined_sem() const { return std::hypot(published.sem, result.sem); }

double SimulationRow::z_score() const { return (result.mean_dz - published.mean_dz) / combined_sem(); }

std::vector<CorrectedZRow> reproduce_corrected_z() {
  std::vector<CorrectedZRow> rows;
  std::optional<fixtures::Fixture> fx;
  for (const auto& cell : fixtures::corrected_z_table()) {
    if (!fx || fx->label != cell.label) fx = fixtures::load_fixture(cell.label);
    const auto raw = fixtures::distribution_from_z(cell.raw);
    const auto via_t = correct(fx->transition, raw);
    const auto via_gamma = correct(fx->gamma, raw);
    const auto inverse = invert_correct(fx->gamma, raw);
    rows.push_back({cell, pauli_z_expectation(via_t.corrected), pauli_z_expectation(via_gamma.corrected), via_t.method, via_gamma.method,
                    pauli_z_expectation(inverse)});
  }
  return rows;
}

std::vector<ZeroStateRow> reproduce_zero_state(const std::vector<CorrectedZRow>& corrected) {
  std::vector<ZeroStateRow> rows;
  const auto gst = fixtures::gst_zero_state_z();
  const auto labels = fixtures::labels();
  for (std::size_t q = 0; q < labels.size(); ++q) {
    const auto fx = fixtures::load_fixture(labels[q]);
    const auto& rho = fx.rho0.matrix();
    ZeroStateRow row{labels[q], 0.0, 0.0, (rho(0, 0) - rho(1, 1)).real(), 1.0, 0.0, gst[q]};
    for (const auto& c : corrected) {
      if (c.published.label == labels[q] && c.published.state == fixtures::PreparedState::Zero) {
        row.t_corrected = c.t_corrected;
        row.gamma_corrected = c.gamma_corrected;
        row.published_t = c.published.t_corrected;
        row.published_gamma = c.published.gamma_corrected;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SimConfig shots_row_config(std::size_t row, const TablesOptions& opts) {
  SimConfig cfg;
  cfg.trials = opts.trials;
  cfg.shots = static_cast<std::uint64_t>(fixtures::shots_table()[row].parameter);
  cfg.seed = row_seed(opts.seed, kShotsTable, row);
  cfg.parallel = opts.parallel;
  return cfg;
}

SimConfig tilt_row_config(std::size_t row, const TablesOptions& opts) {
  SimConfig cfg;
  cfg.trials = opts.trials;
  cfg.shots = 32000;
  cfg.eta = fixtures::tilt_table()[row].parameter;
  cfg.seed = row_seed(opts.seed, kTiltTable, row);
  cfg.parallel = opts.parallel;
  return cfg;
}

SimConfig sampled_gamma_config(const TablesOptions& opts) {
  SimConfig cfg = shots_row_config(k32kRow, opts);
  cfg.gamma_source = GammaSource::SampledT;
  cfg.shots_t = 32000;
  return cfg;
}

TablesReport reproduce_tables(const TablesOptions& opts) {
  TablesReport report;
  report.corrected_z = reproduce_corrected_z();
  report.zero_state = reproduce_zero_state(report.corrected_z);
  if (!opts.simulations) return report;

  const auto shots = fixtures::shots_table();
  for (std::size_t r = 0; r < shots.size(); ++r) {
    const SimConfig cfg = shots_row_config(r, opts);
    report.shots.push_back({shots[r], cfg, run_accuracy_sim(cfg)});
  }
  const auto tilt = fixtures::tilt_table();
  for (std::size_t r = 0; r < tilt.size(); ++r) {
    const SimConfig cfg = tilt_row_config(r, opts);
    report.tilt.push_back({tilt[r], cfg, run_tilt_sim(cfg)});
  }
  const SimConfig cfg = sampled_gamma_config(opts);
  report.sampled_gamma = SimulationRow{shots[k32kRow], cfg, run_sampled_gamma_sim(cfg)};
  return report;
}

io::Json to_json(const TablesReport& report) {
  io::Json corrected = io::Json::array();
  for (const auto& r : report.corrected_z) {
    corrected.push_back({
        {"qubit", std::string(r.published.label)},
        {"state", std::string(fixtures::to_string(r.published.state))},
        {"ideal", fixtures::ideal_z(r.published.state)},
        {"raw", r.published.raw},
        {"t_corrected", r.t_corrected},
        {"t_published", r.published.t_corrected},
        {"t_method", std::string(to_string(r.t_method))},
        {"gamma_corrected", r.gamma_corrected},
        {"gamma_published", r.published.gamma_corrected},
        {"gamma_method", std::string(to_string(r.gamma_method))},
        {"gamma_raw_inverse", r.gamma_raw_inverse_z},
    });
  }
  io::Json zero = io::Json::array();
  for (const auto& r : report.zero_state) {
    zero.push_back({{"qubit", r.label},
                    {"t_corrected", r.t_corrected},
                    {"gamma_corrected", r.gamma_corrected},
                    {"gst", r.gst},
                    {"t_published", r.published_t},
                    {"gamma_published", r.published_gamma},
                    {"gst_published", r.published_gst}});
  }
  auto sim_rows = [](const std::vector<SimulationRow>& rows) {
    io::Json out = io::Json::array();
    for (const auto& r : rows) {
      out.push_back({{"row", std::string(r.published.label)},
                     {"published_mean_dz", r.published.mean_dz},
                     {"published_sem", r.published.sem},
                     {"config", io::to_json(r.config)},
                     {"result", io::to_json(r.result)},
                     {"z_score", r.z_score()}});
    }
    return out;
  };
  io::Json j{{"corrected_z", corrected}, {"zero_state", zero}, {"shots", sim_rows(report.shots)}, {"tilt", sim_rows(report.tilt)}};
  if (report.sampled_gamma) j["sampled_gamma"] = sim_rows({*report.sampled_gamma}).front();
  return j;
}

std::string to_markdown(const TablesReport& report) {
  std::ostringstream md;
  md << "# Reproduced single-qubit results (" << fixtures::kDevice << ")\n\n";

  md << "## Corrected <Z>\n\n";
  md << "| Qubit | State | Ideal | Raw | T (ours) | T (published) | Gamma (ours) | Gamma (published) | Gamma path | diff |\n";
  md << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : report.corrected_z) {
    md << "| " << r.published.label << " | \\" << fixtures::to_string(r.published.state) << " | " << fixed(fixtures::ideal_z(r.published.state), 0) << " | "
       << fixed(r.published.raw) << " | " << fixed(r.t_corrected) << " | " << fixed(r.published.t_corrected) << " | " << fixed(r.gamma_corrected)
       << " | " << fixed(r.published.gamma_corrected) << " | " << to_string(r.gamma_method) << " | "
       << sci(r.gamma_corrected - r.published.gamma_corrected) << " |\n";
  }

  md << "\n## |0> state versus tomography\n\n";
  md << "| Qubit | T | Gamma (ours) | Gamma (published) | GST (ours) | GST (published) | diff |\n|---|---|---|---|---|---|---|\n";
  for (const auto& r : report.zero_state) {
    md << "| " << r.label << " | " << fixed(r.t_corrected) << " | " << fixed(r.gamma_corrected) << " | " << fixed(r.published_gamma) << " | "
       << fixed(r.gst) << " | " << fixed(r.published_gst) << " | " << sci(r.gst - r.published_gst) << " |\n";
  }

  auto sim_table = [&](const char* title, const char* param, const std::vector<SimulationRow>& rows) {
    if (rows.empty()) return;
    md << "\n## " << title << "\n\n";
    md << "| " << param << " | mean dZ (ours) | sem (ours) | mean dZ (published) | sem (published) | z-score |\n|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
      md << "| " << r.published.label << " | " << sci(r.result.mean_dz) << " | " << sci(r.result.sem) << " | " << sci(r.published.mean_dz) << " | "
         << sci(r.published.sem) << " | " << fixed(r.z_score(), 2) << " |\n";
    }
  };
  sim_table("Accuracy versus shots", "N", report.shots);
  sim_table("Accuracy versus frame tilt (N = 32000)", "eta", report.tilt);
  if (report.sampled_gamma) {
    sim_table("Sampled response matrix (N = N_T = 32000)", "N", {*report.sampled_gamma});
  }
  return md.str();
}

void write_tables(const TablesReport& report, const std::filesystem::path& out_dir, bool overwrite) {
  std::filesystem::create_directories(out_dir);
  io::write_json_file(out_dir / "tables.json", to_json(report), overwrite);
  io::write_text_file(out_dir / "tables.md", to_markdown(report), overwrite);
}

}  // namespace gamma_mitig::tables
