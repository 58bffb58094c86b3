// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "gamma_mitig/channel.hpp"
#include "gamma_mitig/correction.hpp"
#include "gamma_mitig/fixtures.hpp"
#include "gamma_mitig/simulation.hpp"
#include "test_support.hpp"

using namespace gamma_mitig;

namespace {

RealMatrix mat2(double a, double b, double c, double d) {
  RealMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

void check_matrix_near(const RealMatrix& got, const RealMatrix& want, double tol) {
  REQUIRE(got.rows() == want.rows());
  REQUIRE(got.cols() == want.cols());
  for (Index r = 0; r < got.rows(); ++r)
    for (Index c = 0; c < got.cols(); ++c) CHECK(std::abs(got(r, c) - want(r, c)) <= tol);
}

}  // namespace

TEST_CASE("gamma_from_povm reads the diagonals of the POVM elements") {
  SUBCASE("Q0 tomography") {
    const auto fx = fixtures::load_fixture("Q0");
    check_matrix_near(gamma_from_povm(fx.povm).entries(), mat2(1.0, 0.0462, 0.0, 0.9538), 5e-4);
  }
  SUBCASE("Q4 tomography") {
    const auto fx = fixtures::load_fixture("Q4");
    check_matrix_near(gamma_from_povm(fx.povm).entries(), mat2(0.9539, 0.0680, 0.0461, 0.9320), 5e-4);
  }
  SUBCASE("ideal measurement gives the identity") {
    for (int n = 1; n <= 3; ++n) {
      const auto g = gamma_from_povm(Povm::ideal(n));
      CHECK(g.kind() == ResponseKind::Gamma);
      CHECK(g.entries() == RealMatrix::Identity(g.dim(), g.dim()));
    }
  }
}

TEST_CASE("Gamma reproduces the forward model on diagonal states") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 2;
    // Includes non-diagonal POVMs: the identity holds whenever rho is diagonal.
    const Povm povm = validate_povm(testing::random_povm_elements(n, 0.3, trial % 3 == 0 ? 0.0 : 0.1, rng));
    const RealVector p_ideal = oracle::random_simplex_point(static_cast<int>(povm.dim()), rng, 0.2);
    const DensityMatrix rho = testing::diagonal_density(p_ideal);

    const RealVector via_gamma = gamma_from_povm(povm).entries() * p_ideal;
    for (Index x = 0; x < povm.size(); ++x) {
      const double born = (povm[x] * rho.matrix()).trace().real();
      CHECK(std::abs(via_gamma(x) - born) <= 1e-12);
    }
  }
}

TEST_CASE("Gamma of a diagonal POVM: unit column sums, row x sums to Tr E_x") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 2;
    const Povm povm = validate_povm(testing::random_diagonal_povm_elements(n, 0.3, rng));
    const RealMatrix g = gamma_from_povm(povm).entries();
    for (Index c = 0; c < g.cols(); ++c) CHECK(std::abs(g.col(c).sum() - 1.0) <= 1e-9);
    for (Index x = 0; x < g.rows(); ++x) CHECK(std::abs(g.row(x).sum() - povm[x].trace().real()) <= 1e-12);
  }
  // Rows of the reference model's Gamma sum to 1.05 and 0.95, not 1.
  const auto rep = stochasticity_report(gamma_from_povm(biased_qubit_povm()));
  CHECK(rep.column_deviation == 0.0);
  CHECK(rep.row_deviation == doctest::Approx(0.05));
}

TEST_CASE("transition_from_model") {
  SUBCASE("perfect preparation gives Gamma") {
    std::mt19937_64 rng(29);
    for (int n = 1; n <= 2; ++n) {
      const Povm povm = validate_povm(testing::random_povm_elements(n, 0.3, 0.1, rng));
      std::vector<DensityMatrix> prepared;
      for (Index x = 0; x < povm.dim(); ++x) prepared.push_back(DensityMatrix::classical(BitString(n, static_cast<std::uint64_t>(x))));
      const auto t = transition_from_model(povm, prepared);
      CHECK(t.kind() == ResponseKind::Transition);
      check_matrix_near(t.entries(), gamma_from_povm(povm).entries(), 1e-15);
    }
  }
  SUBCASE("Q0 |0> column from the tomographic state") {
    const auto fx = fixtures::load_fixture("Q0");
    // Tr(E_0 rho) = e00 r00 + 2 e01 r01 + e11 r11 by hand on the printed values.
    const double p0 = 1.0 * 0.9792 + 2.0 * (-0.0020) * (-0.0390) + 0.0462 * 0.0208;
    const std::vector<DensityMatrix> prepared{fx.rho0, DensityMatrix::classical(BitString(1, 1))};
    const auto t = transition_from_model(fx.povm, prepared);
    CHECK(t(0, 0) == doctest::Approx(p0).epsilon(1e-12));
    CHECK(t(1, 0) == doctest::Approx(1.0 - p0).epsilon(1e-12));
    CHECK(std::abs(t(0, 0) - 0.9798) < 1e-3);
  }
  SUBCASE("maximally mixed preparations give a singular T") {
    const std::vector<DensityMatrix> prepared{DensityMatrix::maximally_mixed(1), DensityMatrix::maximally_mixed(1)};
    const auto t = transition_from_model(Povm::ideal(1), prepared);
    check_matrix_near(t.entries(), mat2(0.5, 0.5, 0.5, 0.5), 0.0);
    CHECK(condition_estimate(t) > 1e12);
  }
  SUBCASE("needs one state per outcome") {
    const std::vector<DensityMatrix> prepared{DensityMatrix::maximally_mixed(1)};
    CHECK_THROWS_AS(transition_from_model(Povm::ideal(1), prepared), Error);
  }
}

TEST_CASE("tensor_compose") {
  const auto id2 = ResponseMatrix::from_entries(ResponseKind::Gamma, RealMatrix::Identity(2, 2));
  SUBCASE("identity factors") {
    const std::vector<ResponseMatrix> f{id2, id2};
    CHECK(tensor_compose(f).entries() == RealMatrix::Identity(4, 4));
  }
  SUBCASE("Q0 (x) Q1 from the tomography table") {
    const std::vector<ResponseMatrix> f{fixtures::load_fixture("Q0").gamma, fixtures::load_fixture("Q1").gamma};
    const auto g = tensor_compose(f);
    CHECK(g.qubits() == 2);
    CHECK(g(0, 0) == doctest::Approx(1.0));
    CHECK(g(3, 3) == doctest::Approx(0.9538 * 0.9282).epsilon(1e-12));
    CHECK(g(3, 3) == doctest::Approx(0.8853).epsilon(1e-4));
    // Hand Kronecker product: entry (2a + b, 2a' + b') = A(a, a') B(b, b').
    for (Index a = 0; a < 2; ++a)
      for (Index b = 0; b < 2; ++b)
        for (Index ap = 0; ap < 2; ++ap)
          for (Index bp = 0; bp < 2; ++bp) CHECK(g(2 * a + b, 2 * ap + bp) == f[0](a, ap) * f[1](b, bp));
  }
  SUBCASE("single factor is unchanged") {
    const std::vector<ResponseMatrix> f{fixtures::load_fixture("Q4").gamma};
    CHECK(tensor_compose(f) == f[0]);
  }
  SUBCASE("errors") {
    const std::vector<ResponseMatrix> mixed{id2, fixtures::load_fixture("Q0").transition};
    CHECK_THROWS_AS(tensor_compose(mixed), Error);
    const std::vector<ResponseMatrix> big(13, id2);
    try {
      tensor_compose(big);
      FAIL("composed 13 qubits");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TooLarge);
    }
  }
}

TEST_CASE("tensor_compose acts independently on product distributions") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g1 = ResponseMatrix::from_entries(ResponseKind::Gamma, oracle::random_readout_matrix(2, 0.3, rng));
    const auto g2 = ResponseMatrix::from_entries(ResponseKind::Gamma, oracle::random_readout_matrix(4, 0.3, rng));
    const RealVector p1 = oracle::random_simplex_point(2, rng);
    const RealVector p2 = oracle::random_simplex_point(4, rng);
    const std::vector<ResponseMatrix> f{g1, g2};
    const RealVector q1 = g1.entries() * p1;
    const RealVector q2 = g2.entries() * p2;
    RealVector joint(8), expected(8);
    for (Index a = 0; a < 2; ++a) {
      for (Index b = 0; b < 4; ++b) {
        joint(4 * a + b) = p1(a) * p2(b);
        expected(4 * a + b) = q1(a) * q2(b);
      }
    }
    const RealVector lhs = tensor_compose(f).entries() * joint;
    CHECK((lhs - expected).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("stochasticity_report") {
  SUBCASE("Q0 Gamma as printed") {
    const auto rep = stochasticity_report(fixtures::load_fixture("Q0").gamma);
    CHECK(rep.column_deviation <= 1e-15);
    CHECK(rep.row_deviation == doctest::Approx(0.0462).epsilon(1e-9));
    CHECK(rep.min_entry == 0.0);
  }
  SUBCASE("identity") {
    const auto rep = stochasticity_report(gamma_from_povm(Povm::ideal(2)));
    CHECK(rep.column_deviation == 0.0);
    CHECK(rep.row_deviation == 0.0);
    CHECK(rep.min_entry == 0.0);
    CHECK(rep.doubly_stochastic(1e-12));
  }
  SUBCASE("Q0 T as printed") {
    const auto rep = stochasticity_report(fixtures::load_fixture("Q0").transition);
    CHECK(rep.column_deviation <= 1e-15);
    CHECK(rep.left_stochastic(1e-12));
  }
}

TEST_CASE("ResponseMatrix validation") {
  CHECK_THROWS_AS(ResponseMatrix::from_entries(ResponseKind::Gamma, mat2(0.9, 0.1, 0.2, 0.9)), Error);
  CHECK_THROWS_AS(ResponseMatrix::from_entries(ResponseKind::Gamma, mat2(1.1, 0.0, -0.1, 1.0)), Error);
  // Printed values slightly outside [0, 1] are clipped at ingestion.
  const auto m = ResponseMatrix::from_entries(ResponseKind::Gamma, mat2(1.0004, 0.05, -0.0004, 0.95), ToleranceSet::ingest(), true);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 0) == 0.0);
}
