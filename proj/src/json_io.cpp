// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include "gamma_mitig/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace gamma_mitig::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();  // non-finite values are written as null
  if (!j.is_number()) parse_error("expected a number, got " + j.dump());
  return j.get<double>();
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

int qubit_count(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) parse_error("'n' must be an integer");
  const int value = n.get<int>();
  if (value < 1 || value > kMaxQubits) parse_error("'n' out of range: " + std::to_string(value));
  return value;
}

void require_qubits(int declared, Index dim) {
  if (dim != dim_for_qubits(declared)) {
    throw Error(ErrorCode::DimensionMismatch, "'n' = " + std::to_string(declared) + " does not match dimension " + std::to_string(dim));
  }
}

Json probs_to_json(const detail::DistributionBase& p) {
  Json probs = Json::object();
  for (Index x = 0; x < p.size(); ++x) probs[BitString(p.qubits(), static_cast<std::uint64_t>(x)).to_string()] = p[x];
  return Json{{"n", p.qubits()}, {"probs", std::move(probs)}};
}

RealVector probs_from_json(const Json& j) {
  const int n = qubit_count(j);
  const Json& probs = field(j, "probs");
  if (!probs.is_object()) parse_error("'probs' must be an object keyed by bitstring");
  RealVector p = RealVector::Zero(dim_for_qubits(n));
  for (const auto& [key, value] : probs.items()) {
    const BitString x = BitString::parse(key);
    if (x.width() != n) throw Error(ErrorCode::WrongWidth, "bitstring '" + key + "' does not have width " + std::to_string(n));
    p(static_cast<Index>(x.index())) = number(value);
  }
  return p;
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const DensityMatrix& rho) { return Json{{"n", rho.qubits()}, {"rho", to_json(rho.matrix())}}; }

Json to_json(const Povm& povm) {
  Json elements = Json::array();
  for (const auto& e : povm.elements()) elements.push_back(to_json(e));
  return Json{{"n", povm.qubits()}, {"elements", std::move(elements)}};
}

Json to_json(const ProbabilityDistribution& p) { return probs_to_json(p); }
Json to_json(const QuasiDistribution& p) { return probs_to_json(p); }

Json to_json(const ResponseMatrix& m) {
  return Json{{"n", m.qubits()}, {"kind", std::string(to_string(m.kind()))}, {"matrix", to_json(m.entries())}};
}

Json to_json(const CorrectionReport& report) {
  return Json{
      {"method", std::string(to_string(report.method))},
      {"corrected", to_json(report.corrected)},
      {"raw_inverse", report.raw_inverse ? to_json(*report.raw_inverse) : Json(nullptr)},
      {"residual", report.residual},
      {"condition_estimate", finite_or_null(report.condition_estimate)},
  };
}

Json to_json(const SimConfig& cfg) {
  // `parallel` is deliberately absent: it never changes results.
  return Json{
      {"trials", cfg.trials},
      {"shots", cfg.shots},
      {"eta", cfg.eta},
      {"seed", cfg.seed},
      {"gamma_source", std::string(to_string(cfg.gamma_source))},
      {"shots_t", cfg.shots_t},
      {"random_eta_sign", cfg.random_eta_sign},
      {"exact_counts", cfg.exact_counts},
      {"fallback_policy", cfg.fallback_policy},
  };
}

Json to_json(const SimResult& result) {
  Json j{{"mean_dz", result.mean_dz}, {"sem", result.sem}, {"trials", result.trials}};
  if (!result.per_trial.empty()) j["per_trial"] = result.per_trial;
  return j;
}

ComplexMatrix complex_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_error("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Index>(j.size());
  ComplexMatrix m(rows, rows);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != rows) throw Error(ErrorCode::BadDimension, "matrix is not square");
    for (Index c = 0; c < rows; ++c) {
      const Json& z = row[static_cast<std::size_t>(c)];
      if (z.is_number()) {
        m(r, c) = z.get<double>();
      } else if (z.is_array() && z.size() == 2) {
        m(r, c) = Complex(number(z[0]), number(z[1]));
      } else {
        parse_error("complex entry must be [re, im], got " + z.dump());
      }
    }
  }
  return m;
}

RealMatrix real_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_error("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Index>(j.size());
  RealMatrix m(rows, rows);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != rows) throw Error(ErrorCode::BadDimension, "matrix is not square");
    for (Index c = 0; c < rows; ++c) m(r, c) = number(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

DensityMatrix density_from_json(const Json& j, const ToleranceSet& tol) {
  const int n = qubit_count(j);
  ComplexMatrix m = complex_matrix_from_json(field(j, "rho"));
  require_qubits(n, m.rows());
  return validate_density(m, tol);
}

Povm povm_from_json(const Json& j, const ToleranceSet& tol) {
  const int n = qubit_count(j);
  const Json& elements = field(j, "elements");
  if (!elements.is_array()) parse_error("'elements' must be an array");
  std::vector<ComplexMatrix> mats;
  for (const auto& e : elements) {
    mats.push_back(complex_matrix_from_json(e));
    require_qubits(n, mats.back().rows());
  }
  return validate_povm(std::move(mats), tol);
}

ProbabilityDistribution distribution_from_json(const Json& j, const ToleranceSet& tol) {
  return ProbabilityDistribution::from_vector(probs_from_json(j), tol.norm);
}

QuasiDistribution quasi_from_json(const Json& j, const ToleranceSet& tol) {
  return QuasiDistribution::from_vector(probs_from_json(j), tol.norm);
}

ResponseMatrix response_from_json(const Json& j, const ToleranceSet& tol) {
  const int n = qubit_count(j);
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) parse_error("'kind' must be a string");
  RealMatrix m = real_matrix_from_json(field(j, "matrix"));
  require_qubits(n, m.rows());
  return ResponseMatrix::from_entries(parse_response_kind(kind.get<std::string>()), std::move(m), tol, true);
}

CorrectionReport report_from_json(const Json& j, const ToleranceSet& tol) {
  const Json& raw = field(j, "raw_inverse");
  std::optional<QuasiDistribution> raw_inverse;
  if (!raw.is_null()) raw_inverse = quasi_from_json(raw, tol);
  return CorrectionReport{
      distribution_from_json(field(j, "corrected"), tol),
      parse_correction_method(field(j, "method").get<std::string>()),
      std::move(raw_inverse),
      number(field(j, "residual")),
      number(field(j, "condition_estimate")),
  };
}

SimConfig sim_config_from_json(const Json& j) {
  SimConfig cfg;
  cfg.trials = field(j, "trials").get<std::uint64_t>();
  cfg.shots = field(j, "shots").get<std::uint64_t>();
  cfg.eta = number(field(j, "eta"));
  cfg.seed = field(j, "seed").get<std::uint64_t>();
  const auto source = field(j, "gamma_source").get<std::string>();
  if (source == "exact") {
    cfg.gamma_source = GammaSource::Exact;
  } else if (source == "sampled_t") {
    cfg.gamma_source = GammaSource::SampledT;
  } else {
    parse_error("unknown gamma_source '" + source + "'");
  }
  cfg.shots_t = field(j, "shots_t").get<std::uint64_t>();
  cfg.random_eta_sign = field(j, "random_eta_sign").get<bool>();
  cfg.exact_counts = field(j, "exact_counts").get<bool>();
  cfg.fallback_policy = field(j, "fallback_policy").get<bool>();
  return cfg;
}

SimResult sim_result_from_json(const Json& j) {
  SimResult r;
  r.mean_dz = number(field(j, "mean_dz"));
  r.sem = number(field(j, "sem"));
  r.trials = field(j, "trials").get<std::uint64_t>();
  if (j.contains("per_trial")) r.per_trial = j.at("per_trial").get<std::vector<double>>();
  return r;
}

Json simulation_document(std::string_view name, const SimConfig& cfg, const SimResult& result) {
  return Json{{"simulation", std::string(name)}, {"config", to_json(cfg)}, {"result", to_json(result)}};
}

Artifact detect_artifact(const Json& j) {
  if (!j.is_object()) parse_error("document is not a JSON object");
  if (j.contains("simulation")) return Artifact::Simulation;
  if (j.contains("method") && j.contains("corrected")) return Artifact::Report;
  if (j.contains("kind") && j.contains("matrix")) return Artifact::Response;
  if (j.contains("elements")) return Artifact::Povm;
  if (j.contains("probs")) return Artifact::Distribution;
  if (j.contains("rho")) return Artifact::Density;
  parse_error("unrecognized document; expected a POVM, density matrix, distribution, response matrix, report or simulation result");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, std::string_view text, bool overwrite) {
  if (!overwrite && std::filesystem::exists(path)) {
    throw Error(ErrorCode::Io, "'" + path.string() + "' exists; pass --force to overwrite");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write to '" + path.string() + "' failed");
}

void write_json_file(const std::filesystem::path& path, const Json& j, bool overwrite) { write_text_file(path, dump(j), overwrite); }

}  // namespace gamma_mitig::io
