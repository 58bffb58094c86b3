// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include "gamma_mitig/kernels.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace gamma_mitig::kernels {

namespace {
int default_threads = -1;
}

void set_num_threads(int threads) {
  if (default_threads < 0) default_threads = omp_get_max_threads();
  omp_set_num_threads(threads >= 1 ? threads : default_threads);
}

int max_threads() { return omp_get_max_threads(); }

int apply_thread_env() {
  const char* env = std::getenv("GAMMA_MITIG_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  const int threads = std::stoi(env);
  set_num_threads(threads);
  return threads;
}

namespace serial {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::Index br = b.rows(), bc = b.cols();
  Eigen::MatrixXd out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index ja = 0; ja < a.cols(); ++ja) {
    for (Eigen::Index ia = 0; ia < a.rows(); ++ia) {
      out.block(ia * br, ja * bc, br, bc) = a(ia, ja) * b;
    }
  }
  return out;
}

}  // namespace serial

namespace omp {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::Index br = b.rows(), bc = b.cols();
  const Eigen::Index blocks = a.rows() * a.cols();
  Eigen::MatrixXd out(a.rows() * br, a.cols() * bc);
#pragma omp parallel for schedule(static)
  for (Eigen::Index k = 0; k < blocks; ++k) {
    const Eigen::Index ia = k % a.rows();
    const Eigen::Index ja = k / a.rows();
    out.block(ia * br, ja * bc, br, bc) = a(ia, ja) * b;
  }
  return out;
}

}  // namespace omp

}  // namespace gamma_mitig::kernels
