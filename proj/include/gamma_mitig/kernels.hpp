// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

// Data-parallel inner loops. Each kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp; the two produce
// bit-identical output (every output element is computed by the same
// sequence of floating point operations).

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace gamma_mitig::kernels {

// Caps the OpenMP team size; values < 1 restore the runtime default.
void set_num_threads(int threads);
int max_threads();

// Reads GAMMA_MITIG_THREADS and applies it if set. Returns the value applied,
// or 0 when the variable is absent.
int apply_thread_env();

namespace serial {

// Kronecker product a (x) b; row index is (i_a * rows_b + i_b).
Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

template <class Fn>
void for_each_index(std::size_t count, Fn&& fn) {
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace serial

namespace omp {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// fn(i) must only write state owned by index i.
template <class Fn>
void for_each_index(std::size_t count, Fn&& fn) {
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
}

}  // namespace omp

}  // namespace gamma_mitig::kernels
