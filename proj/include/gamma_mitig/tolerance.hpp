// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

namespace gamma_mitig {

// Absolute tolerances used by every validation predicate.
struct ToleranceSet {
  double hermitian = 1e-9;
  double psd = 1e-9;  // eigenvalue floor is -psd
  double trace = 1e-9;
  double norm = 1e-9;
  double complete = 1e-9;  // Frobenius norm of (sum E_x - I)

  // Synthetic data built in double precision.
  static constexpr ToleranceSet strict() { return {}; }

  // External data printed to four decimals (tomography tables, hand-written
  // files).
  static constexpr ToleranceSet ingest() {
    return {.hermitian = 5e-3, .psd = 1e-3, .trace = 5e-3, .norm = 5e-3, .complete = 5e-3};
  }
};

enum class ToleranceProfile { Strict, Ingest };

constexpr ToleranceSet tolerances_for(ToleranceProfile profile) {
  return profile == ToleranceProfile::Strict ? ToleranceSet::strict() : ToleranceSet::ingest();
}

ToleranceProfile parse_tolerance_profile(std::string_view name);

}  // namespace gamma_mitig
