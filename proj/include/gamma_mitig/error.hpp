// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gamma_mitig {

enum class ErrorCode {
  BadDimension,
  NotFinite,
  NotHermitian,
  NotPsd,
  TraceNotOne,
  IncompleteSum,
  ElementNotPsd,
  AmbiguousLabeling,
  NotNormalized,
  NegativeProbability,
  WrongWidth,
  DimensionMismatch,
  NotStochastic,
  MixedKinds,
  TooLarge,
  SingularGamma,
  NonConvergence,
  InvalidConfig,
  UnknownLabel,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code);

// Structured failure. `deviation` carries the measured size of the violation
// (e.g. |trace - 1|) when the error is a tolerance check, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double deviation = 0.0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        deviation_(deviation) {}

  ErrorCode code() const noexcept { return code_; }
  double deviation() const noexcept { return deviation_; }

 private:
  ErrorCode code_;
  double deviation_;
};

}  // namespace gamma_mitig
