// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

// JSON encodings:
//   complex number     [re, im]
//   matrix             row-major nested arrays
//   density matrix     {"n": int, "rho": complex matrix}
//   POVM               {"n": int, "elements": [complex matrix, ...]}
//   distribution       {"n": int, "probs": {"<bitstring>": float}}  (missing keys read as 0)
//   response matrix    {"n": int, "kind": "gamma"|"transition", "matrix": real matrix}
// Doubles are written in shortest round-trip form, so write-then-read is
// bit-exact.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gamma_mitig/channel.hpp"
#include "gamma_mitig/correction.hpp"
#include "gamma_mitig/qstate.hpp"
#include "gamma_mitig/simulation.hpp"

namespace gamma_mitig::io {

using Json = nlohmann::json;

Json to_json(const ComplexMatrix& m);
Json to_json(const RealMatrix& m);
Json to_json(const DensityMatrix& rho);
Json to_json(const Povm& povm);
Json to_json(const ProbabilityDistribution& p);
Json to_json(const QuasiDistribution& p);
Json to_json(const ResponseMatrix& m);
Json to_json(const CorrectionReport& report);
Json to_json(const SimConfig& cfg);
Json to_json(const SimResult& result);

ComplexMatrix complex_matrix_from_json(const Json& j);
RealMatrix real_matrix_from_json(const Json& j);
DensityMatrix density_from_json(const Json& j, const ToleranceSet& tol);
Povm povm_from_json(const Json& j, const ToleranceSet& tol);
ProbabilityDistribution distribution_from_json(const Json& j, const ToleranceSet& tol);
QuasiDistribution quasi_from_json(const Json& j, const ToleranceSet& tol);
// External files: entries within tolerance outside [0, 1] are clamped.
ResponseMatrix response_from_json(const Json& j, const ToleranceSet& tol);
CorrectionReport report_from_json(const Json& j, const ToleranceSet& tol);
SimConfig sim_config_from_json(const Json& j);
SimResult sim_result_from_json(const Json& j);

// Simulation output file: {"simulation": name, "config": ..., "result": ...}.
Json simulation_document(std::string_view name, const SimConfig& cfg, const SimResult& result);

enum class Artifact { Density, Povm, Distribution, Response, Report, Simulation };

// Classifies a document by its keys; throws Parse when unrecognized.
Artifact detect_artifact(const Json& j);

Json read_json_file(const std::filesystem::path& path);

// Stable text form used for every file written by the library: two-space
// indent and a trailing newline.
std::string dump(const Json& j);

// Throws Io when `path` exists and `overwrite` is false.
void write_text_file(const std::filesystem::path& path, std::string_view text, bool overwrite);
void write_json_file(const std::filesystem::path& path, const Json& j, bool overwrite);

}  // namespace gamma_mitig::io
