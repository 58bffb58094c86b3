// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

// Reproducible random streams. Every Monte-Carlo trial owns one independent
// std::mt19937_64 per purpose, seeded by
//
//   splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ stream)
//
// so results do not depend on how trials are scheduled across threads.
// mt19937_64 output and the conversions below are fully specified, which
// keeps results identical across standard libraries.

#pragma once

#include <cstdint>
#include <random>

namespace gamma_mitig {

using Rng = std::mt19937_64;

enum class Stream : std::uint64_t {
  State = 1,  // random density matrix
  Shots = 2,  // readout samples
  Gamma = 3,  // sampled response-matrix columns
  Sign = 4,   // frame-tilt sign
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial, Stream stream) {
  return splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ static_cast<std::uint64_t>(stream));
}

inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial, Stream stream) { return Rng(derive_seed(seed, trial, stream)); }

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform on [lo, hi).
inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

}  // namespace gamma_mitig
