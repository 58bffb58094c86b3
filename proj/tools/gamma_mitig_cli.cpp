// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

// gamma-mitig: readout error correction from the command line.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gamma_mitig/channel.hpp"
#include "gamma_mitig/correction.hpp"
#include "gamma_mitig/fixtures.hpp"
#include "gamma_mitig/json_io.hpp"
#include "gamma_mitig/kernels.hpp"
#include "gamma_mitig/simulation.hpp"
#include "gamma_mitig/tables.hpp"

namespace fs = std::filesystem;
namespace gm = gamma_mitig;
using gm::io::Json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitNonConvergence = 2;

struct GlobalOptions {
  std::uint64_t seed = 7;
  std::string tol_profile = "ingest";
  std::string out;
  bool force = false;

  gm::ToleranceSet tolerances() const { return gm::tolerances_for(gm::parse_tolerance_profile(tol_profile)); }
};

void emit(const GlobalOptions& g, const Json& j) {
  if (g.out.empty()) {
    std::cout << gm::io::dump(j);
  } else {
    gm::io::write_json_file(g.out, j, g.force);
  }
}

int run_validate(const GlobalOptions& g, const std::string& path) {
  const Json j = gm::io::read_json_file(path);
  const auto tol = g.tolerances();
  Json summary{{"file", path}, {"valid", true}};
  switch (gm::io::detect_artifact(j)) {
    case gm::io::Artifact::Povm: {
      const auto povm = gm::io::povm_from_json(j, tol);
      summary["type"] = "povm";
      summary["n"] = povm.qubits();
      summary["diagonality_score"] = gm::diagonality_score(povm);
      break;
    }
    case gm::io::Artifact::Density: {
      const auto rho = gm::io::density_from_json(j, tol);
      summary["type"] = "density_matrix";
      summary["n"] = rho.qubits();
      break;
    }
    case gm::io::Artifact::Distribution: {
      const auto p = gm::io::distribution_from_json(j, tol);
      summary["type"] = "distribution";
      summary["n"] = p.qubits();
      if (p.qubits() == 1) summary["pauli_z"] = gm::pauli_z_expectation(p);
      break;
    }
    case gm::io::Artifact::Response: {
      const auto m = gm::io::response_from_json(j, tol);
      const auto rep = gm::stochasticity_report(m);
      summary["type"] = "response_matrix";
      summary["kind"] = std::string(gm::to_string(m.kind()));
      summary["n"] = m.qubits();
      summary["column_deviation"] = rep.column_deviation;
      summary["min_entry"] = rep.min_entry;
      if (m.kind() == gm::ResponseKind::Gamma) summary["row_deviation"] = rep.row_deviation;
      summary["condition_estimate"] = gm::condition_estimate(m);
      break;
    }
    case gm::io::Artifact::Report: {
      gm::io::report_from_json(j, tol);
      summary["type"] = "correction_report";
      break;
    }
    case gm::io::Artifact::Simulation: {
      gm::io::sim_config_from_json(j.at("config"));
      gm::io::sim_result_from_json(j.at("result"));
      summary["type"] = "simulation_result";
      break;
    }
  }
  std::cout << gm::io::dump(summary);
  return 0;
}

int run_build_gamma(const GlobalOptions& g, const std::string& povm_path) {
  const auto povm = gm::io::povm_from_json(gm::io::read_json_file(povm_path), g.tolerances());
  emit(g, gm::io::to_json(gm::gamma_from_povm(povm)));
  return 0;
}

int run_compose(const GlobalOptions& g, const std::vector<std::string>& paths) {
  std::vector<gm::ResponseMatrix> factors;
  for (const auto& p : paths) factors.push_back(gm::io::response_from_json(gm::io::read_json_file(p), g.tolerances()));
  emit(g, gm::io::to_json(gm::tensor_compose(factors)));
  return 0;
}

int run_correct(const GlobalOptions& g, const std::string& gamma_path, const std::string& dist_path, const std::string& policy) {
  const auto tol = g.tolerances();
  const auto gamma = gm::io::response_from_json(gm::io::read_json_file(gamma_path), tol);
  const auto noisy = gm::io::distribution_from_json(gm::io::read_json_file(dist_path), tol);
  emit(g, gm::io::to_json(gm::correct(gamma, noisy, gm::parse_correction_policy(policy))));
  return 0;
}

struct SimulateOptions {
  gm::SimConfig cfg;
  bool fixed_sign = false;
  bool serial = false;
  std::string csv;
};

int run_simulate(const GlobalOptions& g, const std::string& which, SimulateOptions opts) {
  auto& cfg = opts.cfg;
  cfg.seed = g.seed;
  cfg.random_eta_sign = !opts.fixed_sign;
  cfg.parallel = !opts.serial;
  if (!opts.csv.empty()) cfg.keep_per_trial = true;

  gm::SimResult result;
  if (which == "accuracy") {
    result = gm::run_accuracy_sim(cfg);
  } else if (which == "tilt") {
    result = gm::run_tilt_sim(cfg);
  } else {
    if (cfg.shots_t > 0) cfg.gamma_source = gm::GammaSource::SampledT;
    result = gm::run_sampled_gamma_sim(cfg);
  }

  if (!opts.csv.empty()) {
    std::ostringstream csv;
    csv << "trial,delta_z\n";
    char buf[64];
    for (std::size_t i = 0; i < result.per_trial.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", result.per_trial[i]);
      csv << i << ',' << buf << '\n';
    }
    gm::io::write_text_file(opts.csv, csv.str(), g.force);
    result.per_trial.clear();
  }
  emit(g, gm::io::simulation_document(which, cfg, result));
  return 0;
}

int run_reproduce(const GlobalOptions& g, const std::string& out_dir, std::uint64_t trials, bool no_sim) {
  gm::tables::TablesOptions opts;
  opts.seed = g.seed;
  opts.trials = trials;
  opts.simulations = !no_sim;
  const auto report = gm::tables::reproduce_tables(opts);
  gm::tables::write_tables(report, out_dir, g.force);
  std::cout << gm::tables::to_markdown(report);
  return 0;
}

int run_fixtures_export(const GlobalOptions& g, const std::string& label, const std::string& out_dir) {
  const auto fx = gm::fixtures::load_fixture(label);
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  gm::io::write_json_file(dir / (label + "_povm.json"), gm::io::to_json(fx.povm), g.force);
  gm::io::write_json_file(dir / (label + "_rho0.json"), gm::io::to_json(fx.rho0), g.force);
  gm::io::write_json_file(dir / (label + "_gamma.json"), gm::io::to_json(fx.gamma), g.force);
  gm::io::write_json_file(dir / (label + "_transition.json"), gm::io::to_json(fx.transition), g.force);
  std::cout << "wrote " << label << " fixtures to " << dir.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Readout error correction with the Gamma (biased measurement) matrix", "gamma-mitig"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Base RNG seed")->capture_default_str();
  app.add_option("--tol-profile", g.tol_profile, "Validation tolerances for input files")
      ->check(CLI::IsMember({"strict", "ingest"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Output file (stdout when omitted)");
  app.add_flag("--force", g.force, "Overwrite existing output files");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Validate a POVM, density matrix, distribution, response matrix or report");
  validate->add_option("file", validate_path)->required()->check(CLI::ExistingFile);

  std::string povm_path;
  auto* build = app.add_subcommand("build-gamma", "Build Gamma from a POVM file");
  build->add_option("--povm", povm_path)->required()->check(CLI::ExistingFile);

  std::vector<std::string> compose_paths;
  auto* compose = app.add_subcommand("compose", "Kronecker-compose response matrices (first file = most significant qubits)");
  compose->add_option("files", compose_paths)->required()->check(CLI::ExistingFile);

  std::string gamma_path, dist_path, policy = "fallback";
  auto* correct = app.add_subcommand("correct", "Correct a measured distribution");
  correct->add_option("--gamma", gamma_path)->required()->check(CLI::ExistingFile);
  correct->add_option("--dist", dist_path)->required()->check(CLI::ExistingFile);
  correct->add_option("--policy", policy)->check(CLI::IsMember({"inverse", "lsq", "fallback"}))->capture_default_str();

  SimulateOptions sim;
  std::string sim_kind;
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo accuracy of <Z> correction");
  simulate->require_subcommand(1);
  simulate->fallthrough();
  for (const char* name : {"accuracy", "tilt", "sampled-gamma"}) {
    auto* sub = simulate->add_subcommand(name);
    sub->fallthrough();
    sub->add_option("--shots", sim.cfg.shots, "Samples per estimated distribution")->capture_default_str();
    sub->add_option("--trials", sim.cfg.trials, "Random density matrices")->capture_default_str();
    sub->add_flag("--exact-counts", sim.cfg.exact_counts, "Skip shot sampling (infinite-shot limit)");
    sub->add_flag("--fallback", sim.cfg.fallback_policy, "Correct with inverse-then-least-squares instead of least squares");
    sub->add_flag("--serial", sim.serial, "Run trials on one thread");
    sub->add_option("--emit-csv", sim.csv, "Write per-trial delta Z to this CSV file");
    if (std::string(name) == "tilt") {
      sub->add_option("--eta", sim.cfg.eta, "Frame tilt")->required();
      sub->add_flag("--fixed-sign", sim.fixed_sign, "Use +eta on every trial instead of a random sign");
    }
    if (std::string(name) == "sampled-gamma") {
      sub->add_option("--shots-t", sim.cfg.shots_t, "Samples per column of the estimated response matrix (0 = exact)")->required();
    }
    sub->callback([&sim_kind, name] { sim_kind = name; });
  }

  std::string tables_dir = "tables";
  std::uint64_t tables_trials = 1000;
  bool no_sim = false;
  auto* reproduce = app.add_subcommand("reproduce-tables", "Regenerate the published single-qubit tables");
  reproduce->add_option("--out-dir", tables_dir)->capture_default_str();
  reproduce->add_option("--trials", tables_trials)->capture_default_str();
  reproduce->add_flag("--no-sim", no_sim, "Skip the Monte-Carlo tables");

  auto* fixtures = app.add_subcommand("fixtures", "Bundled tomography fixtures");
  fixtures->require_subcommand(1);
  fixtures->fallthrough();
  auto* fx_list = fixtures->add_subcommand("list");
  std::string fx_label, fx_dir = ".";
  auto* fx_export = fixtures->add_subcommand("export");
  fx_export->fallthrough();
  fx_export->add_option("label", fx_label)->required();
  fx_export->add_option("--out-dir", fx_dir)->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  gm::kernels::apply_thread_env();

  try {
    if (*validate) return run_validate(g, validate_path);
    if (*build) return run_build_gamma(g, povm_path);
    if (*compose) return run_compose(g, compose_paths);
    if (*correct) return run_correct(g, gamma_path, dist_path, policy);
    if (*simulate) return run_simulate(g, sim_kind, sim);
    if (*reproduce) return run_reproduce(g, tables_dir, tables_trials, no_sim);
    if (*fx_list) {
      for (const auto& label : gm::fixtures::labels()) std::cout << label << '\n';
      return 0;
    }
    if (*fx_export) return run_fixtures_export(g, fx_label, fx_dir);
  } catch (const gm::Error& e) {
    std::cerr << "gamma-mitig: " << e.what() << '\n';
    return e.code() == gm::ErrorCode::NonConvergence ? kExitNonConvergence : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "gamma-mitig: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
