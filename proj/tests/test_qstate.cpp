// Copyright 2026 The gamma-mitig Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "gamma_mitig/qstate.hpp"
#include "gamma_mitig/simulation.hpp"
#include "test_support.hpp"

using namespace gamma_mitig;

namespace {

ComplexMatrix mat2(double a, double b, double c, double d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("bitstrings are big-endian with qubit 0 most significant") {
  const BitString x = BitString::parse("011");
  CHECK(x.width() == 3);
  CHECK(x.index() == 3);
  CHECK_FALSE(x.bit(0));
  CHECK(x.bit(1));
  CHECK(x.bit(2));
  CHECK(x.to_string() == "011");
  CHECK(BitString(4, 9).to_string() == "1001");
  CHECK_THROWS_AS(BitString(2, 4), Error);
  CHECK_THROWS_AS(BitString::parse("01a"), Error);
}

TEST_CASE("validate_density") {
  SUBCASE("maximally mixed") {
    const auto rho = validate_density(ComplexMatrix::Identity(2, 2) / 2.0);
    CHECK(rho.qubits() == 1);
  }
  SUBCASE("tomographic |0> estimate for Q0") {
    const auto rho = validate_density(mat2(0.9792, -0.0390, -0.0390, 0.0208));
    CHECK(rho.populations()(0) == doctest::Approx(0.9792));
  }
  SUBCASE("trace 1.1") {
    try {
      validate_density(mat2(1.0, 0.0, 0.0, 0.1));
      FAIL("accepted a trace-1.1 matrix");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TraceNotOne);
      CHECK(e.deviation() == doctest::Approx(0.1).epsilon(1e-12));
    }
  }
  SUBCASE("failures name the violated invariant") {
    CHECK(code_of([] { validate_density(mat2(0.5, 0.1, 0.0, 0.5)); }) == ErrorCode::NotHermitian);
    CHECK(code_of([] { validate_density(mat2(1.2, 0.0, 0.0, -0.2)); }) == ErrorCode::NotPsd);
    CHECK(code_of([] { validate_density(ComplexMatrix::Identity(3, 3) / 3.0); }) == ErrorCode::BadDimension);
  }
}

TEST_CASE("validate_povm") {
  SUBCASE("reference biased POVM keeps its labels") {
    const auto povm = validate_povm({mat2(1, 0, 0, 0.05), mat2(0, 0, 0, 0.95)});
    CHECK(povm.qubits() == 1);
    CHECK(povm[0](1, 1).real() == 0.05);
    CHECK(povm[1](1, 1).real() == 0.95);
  }
  SUBCASE("ideal projective measurement") {
    const auto povm = validate_povm({mat2(1, 0, 0, 0), mat2(0, 0, 0, 1)});
    CHECK(diagonality_score(povm) == 0.0);
  }
  SUBCASE("elements are reordered into label order") {
    const auto povm = validate_povm({mat2(0, 0, 0, 0.95), mat2(1, 0, 0, 0.05)});
    CHECK(povm[0](0, 0).real() == 1.0);
  }
  SUBCASE("incomplete sum") {
    try {
      validate_povm({mat2(1, 0, 0, 0.05), mat2(0, 0, 0, 0.90)});
      FAIL("accepted an incomplete POVM");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IncompleteSum);
      CHECK(e.deviation() == doctest::Approx(0.05));
    }
  }
  SUBCASE("non-PSD element") {
    CHECK(code_of([] { validate_povm({mat2(1.1, 0, 0, 0.05), mat2(-0.1, 0, 0, 0.95)}); }) == ErrorCode::ElementNotPsd);
  }
  SUBCASE("two elements nearest the same projector") {
    // Rows 0 and 1 of this response matrix both peak in column 0.
    RealMatrix r(4, 4);
    r << 0.6, 0.5, 0.0, 0.0,
         0.3, 0.1, 0.0, 0.0,
         0.1, 0.4, 0.3, 0.0,
         0.0, 0.0, 0.7, 1.0;
    std::vector<ComplexMatrix> elements;
    for (Index x = 0; x < 4; ++x) elements.push_back(r.row(x).transpose().cast<Complex>().asDiagonal());
    CHECK(code_of([&] { validate_povm(elements); }) == ErrorCode::AmbiguousLabeling);
    CHECK(code_of([] { validate_povm({mat2(0.5, 0, 0, 0.5), mat2(0.5, 0, 0, 0.5)}); }) == ErrorCode::AmbiguousLabeling);
  }
  SUBCASE("element count must be 2^n") {
    CHECK(code_of([] { validate_povm({ComplexMatrix::Identity(2, 2)}); }) == ErrorCode::BadDimension);
  }
}

TEST_CASE("label assignment is invariant under shuffling the input") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 2;
    auto elements = testing::random_povm_elements(n, 0.3, 0.05, rng);
    const Povm canonical = validate_povm(elements);
    std::shuffle(elements.begin(), elements.end(), rng);
    const Povm shuffled = validate_povm(elements);
    for (Index x = 0; x < canonical.size(); ++x) CHECK(shuffled[x] == canonical[x]);
  }
}

TEST_CASE("Born-rule vectors of valid POVMs and states are distributions") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const Povm povm = validate_povm(testing::random_povm_elements(n, 0.4, 0.2, rng));
    const DensityMatrix rho = testing::random_density(n, rng);
    RealVector p(povm.size());
    for (Index x = 0; x < povm.size(); ++x) p(x) = (povm[x] * rho.matrix()).trace().real();
    CHECK(p.minCoeff() >= -1e-12);
    CHECK(std::abs(p.sum() - 1.0) <= 1e-9);
    CHECK_NOTHROW(ProbabilityDistribution::from_vector(p));
  }
}

TEST_CASE("diagonality_score") {
  CHECK(diagonality_score(biased_qubit_povm()) == 0.0);

  SUBCASE("frame-tilted family at eta = 0.005") {
    // Hand evaluation: |off|_F = sqrt(2) eta for both elements.
    const double eta = 0.005;
    const double off = std::sqrt(2.0) * eta;
    const double s0 = off / std::sqrt(1.0 + 0.05 * 0.05 + 2 * eta * eta);
    const double s1 = off / std::sqrt(0.95 * 0.95 + 2 * eta * eta);
    CHECK(s1 > s0);
    CHECK(diagonality_score(tilted_qubit_povm(eta)) == doctest::Approx(s1).epsilon(1e-12));
    CHECK(s1 == doctest::Approx(0.0074430).epsilon(1e-4));
  }
  SUBCASE("tomographic E_0 of Q0 with E_1 = I - E_0") {
    const auto povm = validate_povm({mat2(1.0, -0.002, -0.002, 0.0462), mat2(0.0, 0.002, 0.002, 0.9538)}, ToleranceSet::ingest());
    const double off = std::sqrt(2.0) * 0.002;
    const double expected = off / std::sqrt(0.9538 * 0.9538 + 2 * 0.002 * 0.002);
    CHECK(diagonality_score(povm) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(0.0029654).epsilon(1e-4));
  }
}

TEST_CASE("pauli_z_expectation") {
  auto dist = [](double p0) {
    RealVector p(2);
    p << p0, 1.0 - p0;
    return ProbabilityDistribution::from_vector(p);
  };
  CHECK(pauli_z_expectation(dist(0.9798)) == doctest::Approx(0.9596).epsilon(1e-12));
  CHECK(pauli_z_expectation(dist(0.5)) == 0.0);
  CHECK(pauli_z_expectation(dist(1.0)) == 1.0);
  CHECK(code_of([] { pauli_z_expectation(ProbabilityDistribution::uniform(2)); }) == ErrorCode::WrongWidth);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto p = dist(u(rng));
    CHECK(pauli_z_expectation(p) + 1.0 == doctest::Approx(2.0 * p[0]).epsilon(1e-14));
  }
}

TEST_CASE("marginal <Z> on a chosen qubit") {
  // p(00) = 0.5, p(01) = 0.2, p(10) = 0.3, p(11) = 0
  RealVector p(4);
  p << 0.5, 0.2, 0.3, 0.0;
  const auto dist = ProbabilityDistribution::from_vector(p);
  CHECK(pauli_z_expectation(dist, 0) == doctest::Approx(0.7 - 0.3));
  CHECK(pauli_z_expectation(dist, 1) == doctest::Approx(0.8 - 0.2));
  CHECK_THROWS_AS(pauli_z_expectation(dist, 2), Error);
}

TEST_CASE("distributions") {
  RealVector bad(2);
  bad << 0.7, 0.2;
  CHECK(code_of([&] { ProbabilityDistribution::from_vector(bad); }) == ErrorCode::NotNormalized);
  RealVector negative(2);
  negative << 1.1, -0.1;
  CHECK(code_of([&] { ProbabilityDistribution::from_vector(negative); }) == ErrorCode::NegativeProbability);
  const auto quasi = QuasiDistribution::from_vector(negative);
  CHECK_FALSE(quasi.is_physical(1e-10));
  CHECK(pauli_z_expectation(quasi) == doctest::Approx(1.2));
}
