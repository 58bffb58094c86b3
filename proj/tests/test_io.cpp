// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <filesystem>
#include <random>

#include <doctest.h>

#include "gamma_mitig/fixtures.hpp"
#include "gamma_mitig/json_io.hpp"
#include "gamma_mitig/tables.hpp"
#include "oracles/simplex_grid.hpp"
#include "test_support.hpp"

using namespace gamma_mitig;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const char* name) {
  const fs::path dir = fs::temp_directory_path() / "gamma_mitig_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("JSON round trips are exact") {
  std::mt19937_64 rng(71);
  const auto tol = ToleranceSet::strict();
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 2;
    const auto rho = testing::random_density(n, rng);
    CHECK(io::density_from_json(io::to_json(rho), tol).matrix() == rho.matrix());

    const auto povm = validate_povm(testing::random_povm_elements(n, 0.3, 0.1, rng));
    const auto povm_back = io::povm_from_json(io::Json::parse(io::dump(io::to_json(povm))), tol);
    for (Index x = 0; x < povm.size(); ++x) CHECK(povm_back[x] == povm[x]);

    const auto p = ProbabilityDistribution::from_vector(oracle::random_simplex_point(1 << n, rng, 0.3));
    CHECK(io::distribution_from_json(io::Json::parse(io::dump(io::to_json(p))), tol) == p);

    const auto g = gamma_from_povm(povm);
    CHECK(io::response_from_json(io::Json::parse(io::dump(io::to_json(g))), tol) == g);
  }
}

TEST_CASE("correction reports and simulation results round trip") {
  const auto fx = fixtures::load_fixture("Q1");
  const auto report = correct(fx.gamma, fixtures::distribution_from_z(-0.8616));
  const auto back = io::report_from_json(io::Json::parse(io::dump(io::to_json(report))), ToleranceSet::strict());
  CHECK(back.method == report.method);
  CHECK(back.corrected == report.corrected);
  REQUIRE(back.raw_inverse.has_value());
  CHECK(*back.raw_inverse == *report.raw_inverse);
  CHECK(back.residual == report.residual);
  CHECK(back.condition_estimate == report.condition_estimate);

  SimConfig cfg;
  cfg.trials = 10;
  cfg.shots = 100;
  cfg.seed = 5;
  cfg.keep_per_trial = true;
  const auto result = run_accuracy_sim(cfg);
  const auto doc = io::Json::parse(io::dump(io::simulation_document("accuracy", cfg, result)));
  CHECK(io::detect_artifact(doc) == io::Artifact::Simulation);
  const auto cfg_back = io::sim_config_from_json(doc.at("config"));
  CHECK(cfg_back.seed == 5);
  CHECK(cfg_back.shots == 100);
  const auto res_back = io::sim_result_from_json(doc.at("result"));
  CHECK(res_back.mean_dz == result.mean_dz);
  CHECK(res_back.sem == result.sem);
  CHECK(res_back.per_trial == result.per_trial);
}

TEST_CASE("singular Gamma reports a null condition estimate") {
  const auto g = ResponseMatrix::from_entries(ResponseKind::Gamma, RealMatrix::Constant(2, 2, 0.5));
  const auto j = io::to_json(correct(g, ProbabilityDistribution::uniform(1)));
  CHECK(j.at("condition_estimate").is_null());
  CHECK(j.at("raw_inverse").is_null());
  CHECK(j.at("method") == "least_squares");
}

TEST_CASE("distribution documents are keyed by big-endian bitstrings") {
  RealVector p(4);
  p << 0.1, 0.2, 0.3, 0.4;
  const auto j = io::to_json(ProbabilityDistribution::from_vector(p));
  CHECK(j.at("n") == 2);
  CHECK(j.at("probs").at("01") == 0.2);
  CHECK(j.at("probs").at("10") == 0.3);
  const auto sparse = io::Json::parse(R"({"n": 2, "probs": {"11": 1.0}})");
  CHECK(io::distribution_from_json(sparse, ToleranceSet::strict())[3] == 1.0);
  const auto bad = io::Json::parse(R"({"n": 2, "probs": {"2": 1.0}})");
  CHECK_THROWS_AS(io::distribution_from_json(bad, ToleranceSet::strict()), Error);
}

TEST_CASE("detect_artifact") {
  const auto fx = fixtures::load_fixture("Q0");
  CHECK(io::detect_artifact(io::to_json(fx.rho0)) == io::Artifact::Density);
  CHECK(io::detect_artifact(io::to_json(fx.povm)) == io::Artifact::Povm);
  CHECK(io::detect_artifact(io::to_json(fx.gamma)) == io::Artifact::Response);
  CHECK(io::detect_artifact(io::to_json(ProbabilityDistribution::uniform(1))) == io::Artifact::Distribution);
  CHECK_THROWS_AS(io::detect_artifact(io::Json::parse(R"({"foo": 1})")), Error);
}

TEST_CASE("files are never overwritten without permission") {
  const auto dir = scratch_dir("overwrite");
  const auto path = dir / "a.json";
  io::write_json_file(path, io::Json{{"x", 1}}, false);
  try {
    io::write_json_file(path, io::Json{{"x", 2}}, false);
    FAIL("overwrote an existing file");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
  CHECK(io::read_json_file(path).at("x") == 1);
  io::write_json_file(path, io::Json{{"x", 2}}, true);
  CHECK(io::read_json_file(path).at("x") == 2);
  CHECK_THROWS_AS(io::read_json_file(dir / "missing.json"), Error);
}

TEST_CASE("fixtures") {
  CHECK(fixtures::labels() == std::vector<std::string>{"Q0", "Q1", "Q2", "Q3", "Q4"});
  SUBCASE("Q0 Gamma as printed") {
    const auto g = fixtures::load_fixture("Q0").gamma;
    CHECK(g(0, 0) == 1.0);
    CHECK(g(0, 1) == 0.0462);
    CHECK(g(1, 1) == 0.9538);
  }
  SUBCASE("Q4 T as printed") {
    const auto t = fixtures::load_fixture("Q4").transition;
    CHECK(t(0, 0) == 0.8508);
    CHECK(t(1, 1) == 0.8401);
  }
  SUBCASE("Q2 density is used without renormalization") {
    const auto rho = fixtures::load_fixture("Q2").rho0;
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-3));
  }
  SUBCASE("unknown label") {
    try {
      fixtures::load_fixture("Q9");
      FAIL("loaded Q9");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnknownLabel);
    }
  }
  SUBCASE("bundled Gamma is the POVM diagonal up to print rounding") {
    for (const auto& label : fixtures::labels()) {
      const auto fx = fixtures::load_fixture(label);
      CHECK((gamma_from_povm(fx.povm).entries() - fx.gamma.entries()).cwiseAbs().maxCoeff() <= 5e-4);
    }
  }
}

TEST_CASE("corrected-Z and zero-state tables from the fixtures") {
  const auto rows = tables::reproduce_corrected_z();
  REQUIRE(rows.size() == 15);
  for (const auto& r : rows) {
    CAPTURE(r.published.label);
    CAPTURE(fixtures::to_string(r.published.state));
    CHECK(std::abs(r.gamma_corrected - r.published.gamma_corrected) <= 5e-4);
    CHECK(std::abs(r.t_corrected - r.published.t_corrected) <= 2e-3);
    CHECK((r.gamma_method == CorrectionMethod::LeastSquares) == r.published.gamma_used_least_squares);
  }
  const auto zero = tables::reproduce_zero_state(rows);
  REQUIRE(zero.size() == 5);
  CHECK(zero[4].gamma_corrected == doctest::Approx(0.7674).epsilon(1e-3));
  for (const auto& z : zero) CHECK(std::abs(z.gst - z.published_gst) <= 5e-4);
}

TEST_CASE("write_tables without simulations") {
  tables::TablesOptions opts;
  opts.simulations = false;
  const auto report = tables::reproduce_tables(opts);
  CHECK(report.shots.empty());
  CHECK_FALSE(report.sampled_gamma.has_value());
  const auto dir = scratch_dir("tables");
  tables::write_tables(report, dir, false);
  CHECK(fs::exists(dir / "tables.json"));
  CHECK(fs::exists(dir / "tables.md"));
  CHECK_THROWS_AS(tables::write_tables(report, dir, false), Error);
  CHECK(io::read_json_file(dir / "tables.json").is_object());
}
