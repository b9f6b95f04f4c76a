#include "qsnn/tasks.hpp"

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "qsnn/linalg.hpp"

using namespace qsnn;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("real-amplitude pure states") {
  CHECK(pure_state_real(0.0).population(0) == doctest::Approx(1.0));
  CHECK(pure_state_real(kPi / 2.0).population(1) == doctest::Approx(1.0));
  const DensityMatrix rho = pure_state_real(kPi / 4.0);
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      CHECK(rho.matrix()(i, j).real() == doctest::Approx(0.5));
      CHECK(rho.matrix()(i, j).imag() == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("complex-amplitude pure states") {
  const DensityMatrix flat = pure_state_complex(0.0);
  CHECK(flat.matrix()(0, 1).real() == doctest::Approx(0.5));

  const DensityMatrix anti = pure_state_complex(kPi);
  CHECK(anti.matrix()(0, 1).real() == doctest::Approx(-0.5));
  CHECK(anti.matrix()(1, 0).real() == doctest::Approx(-0.5));

  const DensityMatrix quarter = pure_state_complex(kPi / 2.0);
  CHECK(quarter.matrix()(0, 1).imag() == doctest::Approx(-0.5));
  CHECK(quarter.matrix()(1, 0).imag() == doctest::Approx(0.5));
}

TEST_CASE("Bloch-sphere mixed states") {
  const DensityMatrix center = bloch_mixed_state(0.3, 1.2, 0.0);
  CHECK((center.matrix() - 0.5 * ComplexMatrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  CHECK(bloch_mixed_state(0.0, 0.0, 1.0).population(0) ==
        doctest::Approx(1.0));

  const DensityMatrix x = bloch_mixed_state(kPi / 2.0, 0.0, 0.5);
  CHECK(x.population(0) == doctest::Approx(0.5));
  CHECK(x.matrix()(0, 1).real() == doctest::Approx(0.25));

  // Eigenvalues (1 +/- r)/2.
  const auto es = hermitian_eig(bloch_mixed_state(0.7, 2.0, 0.4).matrix());
  CHECK(es.values(0) == doctest::Approx(0.3));
  CHECK(es.values(1) == doctest::Approx(0.7));

  CHECK_THROWS_AS(bloch_mixed_state(0.0, 0.0, 1.5), ContractViolation);
}

TEST_CASE("multi-state families") {
  CHECK(multi_state_real(4, 4).population(0) == doctest::Approx(1.0));
  CHECK(multi_state_complex(2, 1).matrix()(0, 1).real() ==
        doctest::Approx(-0.5));
  CHECK(multi_state_real(3, 1).population(0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(multi_state_real(3, 0), ContractViolation);
  CHECK_THROWS_AS(multi_state_real(3, 4), ContractViolation);
}

TEST_CASE("GHZ and W states") {
  const DensityMatrix ghz = ghz_state();
  const DensityMatrix w = w_state();
  CHECK(ghz.population(0) == doctest::Approx(0.5));
  CHECK(ghz.population(7) == doctest::Approx(0.5));
  CHECK(w.population(1) == doctest::Approx(1.0 / 3.0));
  CHECK(w.population(2) == doctest::Approx(1.0 / 3.0));
  CHECK(w.population(4) == doctest::Approx(1.0 / 3.0));
  // Orthogonal supports.
  CHECK(std::abs((ghz.matrix() * w.matrix()).trace()) < 1e-15);
}

TEST_CASE("Werner-like states") {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix sz(2, 2);
  sz << 1, 0, 0, -1;

  CHECK((werner_like(0.0, id, id).matrix() -
         0.25 * ComplexMatrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  const DensityMatrix bell = werner_like(1.0, id, id);
  CHECK(bell.matrix()(1, 2).real() == doctest::Approx(0.5));
  CHECK(bell.population(1) == doctest::Approx(0.5));
  CHECK(bell.population(2) == doctest::Approx(0.5));

  const DensityMatrix mixed = werner_like(0.5, sz, id);
  CHECK(mixed.population(0) == doctest::Approx(0.125));
  CHECK(mixed.population(1) == doctest::Approx(0.375));
  CHECK(mixed.population(2) == doctest::Approx(0.375));
  CHECK(mixed.population(3) == doctest::Approx(0.125));
  CHECK(mixed.matrix()(1, 2).real() == doctest::Approx(-0.25));

  ComplexMatrix not_unitary = 2.0 * id;
  CHECK_THROWS_AS(werner_like(0.5, not_unitary, id), ContractViolation);
}

TEST_CASE("werner eigenvalues are covariant under local unitaries") {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix sz(2, 2);
  sz << 1, 0, 0, -1;
  ComplexMatrix hadamard(2, 2);
  hadamard << 1, 1, 1, -1;
  hadamard /= std::numbers::sqrt2;
  for (double p : {0.1, 0.5, 0.9}) {
    const RealVector a = hermitian_eig(werner_like(p, id, id).matrix()).values;
    const RealVector b =
        hermitian_eig(werner_like(p, sz, hadamard).matrix()).values;
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("entanglement label boundary") {
  CHECK(entanglement_label(0.0) == EntanglementClass::separable);
  CHECK(entanglement_label(1.0 / 3.0) == EntanglementClass::separable);
  CHECK(entanglement_label(0.34) == EntanglementClass::entangled);
}

TEST_CASE("Helstrom bound basics") {
  const DensityMatrix rho = pure_state_real(0.4);
  CHECK(helstrom_success(rho, rho, 0.5, 0.5) == doctest::Approx(0.5));

  CHECK(helstrom_success(pure_state_real(0.0), pure_state_real(kPi / 2.0),
                         0.5, 0.5) == doctest::Approx(1.0));

  CHECK(helstrom_success(pure_state_real(0.0), pure_state_real(kPi / 6.0),
                         0.5, 0.5) == doctest::Approx(0.75));

  CHECK_THROWS_AS(
      helstrom_success(pure_state_real(0.0), pure_state_real(0.1), 0.6, 0.5),
      ContractViolation);
}

TEST_CASE("Helstrom closed forms across the paper grids") {
  for (int k = 0; k < 12; ++k) {
    const double theta = k * kPi / 6.0;
    CHECK(helstrom_success(pure_state_real(0.0), pure_state_real(theta), 0.5,
                           0.5) ==
          doctest::Approx(0.5 * (1.0 + std::abs(std::sin(theta)))));
    CHECK(helstrom_success(pure_state_complex(0.0), pure_state_complex(theta),
                           0.5, 0.5) ==
          doctest::Approx(0.5 * (1.0 + std::abs(std::sin(theta / 2.0)))));
  }
  // Antipodal same-radius mixed pairs: (1 + r)/2.
  for (double r : {0.1, 0.5, 0.9}) {
    const DensityMatrix up = bloch_mixed_state(0.4, 1.1, r);
    const DensityMatrix down =
        bloch_mixed_state(kPi - 0.4, 1.1 + kPi, r);
    CHECK(helstrom_success(up, down, 0.5, 0.5) ==
          doctest::Approx(0.5 * (1.0 + r)));
  }
}

TEST_CASE("binary training set layout") {
  const NetworkTopology topo = standard_topology(2, {2}, 2);
  const auto samples =
      binary_training_set(pure_state_real(0.0), pure_state_real(0.3), topo);
  REQUIRE(samples.size() == 2);
  CHECK(samples[0].label == 4);
  CHECK(samples[1].label == 5);
  CHECK(samples[0].weight == 0.5);
  CHECK(samples[0].rho_in.dim() == 6);
  // Identical inputs with different labels: the Helstrom oracle is 0.5.
  CHECK(helstrom_success(pure_state_real(0.0), pure_state_real(0.0), 0.5,
                         0.5) == doctest::Approx(0.5));
}

TEST_CASE("werner training and test sets") {
  const NetworkTopology topo = standard_topology(4, {4}, 2);
  ComplexMatrix sz(2, 2);
  sz << 1, 0, 0, -1;
  const WernerSets sets =
      build_werner_sets(topo, sz, ComplexMatrix::Identity(2, 2));
  REQUIRE(sets.train.size() == 4);
  // Labels (S, S, E, E) for p = (0, 0.2, 0.4, 0.8).
  CHECK(sets.train[0].label == 8);
  CHECK(sets.train[1].label == 8);
  CHECK(sets.train[2].label == 9);
  CHECK(sets.train[3].label == 9);
  CHECK(sets.train[0].rho_in.dim() == 10);

  REQUIRE(sets.test.size() == 49);
  CHECK(sets.test[0].p == doctest::Approx(0.02));
  CHECK(sets.test[48].p == doctest::Approx(0.98));
  int entangled = 0;
  for (const WernerSample& s : sets.test) {
    if (s.truth == EntanglementClass::entangled) ++entangled;
  }
  CHECK(entangled == 33);  // p = 0.34 .. 0.98
}

TEST_CASE("random Bloch pairs are valid, on-radius, and seeded") {
  const auto [a, b] = random_bloch_pair(0.5, 99);
  const auto [c, d] = random_bloch_pair(0.5, 99);
  CHECK((a.matrix() - c.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((b.matrix() - d.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() > 1e-6);
  for (const DensityMatrix& rho : {a, b}) {
    const RealVector ev = hermitian_eig(rho.matrix()).values;
    CHECK(ev(0) == doctest::Approx(0.25));
    CHECK(ev(1) == doctest::Approx(0.75));
  }
}
