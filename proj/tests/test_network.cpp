#include "qsnn/network.hpp"

#include <doctest.h>

using namespace qsnn;

TEST_CASE("standard topology reproduces the published parameter counts") {
  const NetworkTopology t222 = standard_topology(2, {2}, 2);
  CHECK(t222.dim() == 6);
  CHECK(t222.hamiltonian_edges.size() == 5);
  CHECK(t222.lindblad_edges.size() == 8);

  const NetworkTopology t442 = standard_topology(4, {4}, 2);
  CHECK(t442.dim() == 10);
  CHECK(t442.hamiltonian_edges.size() == 22);
  CHECK(t442.lindblad_edges.size() == 24);

  const NetworkTopology t822 = standard_topology(8, {2}, 2);
  CHECK(t822.hamiltonian_edges.size() == 44);  // C(8,2) + 8*2
  CHECK(t822.lindblad_edges.size() == 20);     // 8*2 + 2*2
}

TEST_CASE("standard topology edge-count formula on assorted shapes") {
  struct Shape {
    int input;
    std::vector<int> hidden;
    int output;
  };
  for (const Shape& s : {Shape{2, {3}, 2}, Shape{2, {2, 2}, 2},
                         Shape{4, {5}, 2}, Shape{4, {4, 4}, 2},
                         Shape{3, {}, 2}}) {
    const NetworkTopology topo = standard_topology(s.input, s.hidden, s.output);
    std::vector<int> layers{s.input};
    layers.insert(layers.end(), s.hidden.begin(), s.hidden.end());
    layers.push_back(s.output);
    size_t expect_gamma = 0;
    for (size_t l = 0; l + 1 < layers.size(); ++l) {
      expect_gamma += static_cast<size_t>(layers[l]) * layers[l + 1];
    }
    const size_t expect_h =
        static_cast<size_t>(s.input) * (s.input - 1) / 2 +
        static_cast<size_t>(s.input) * layers[1];
    CHECK(topo.hamiltonian_edges.size() == expect_h);
    CHECK(topo.lindblad_edges.size() == expect_gamma);
    topo.validate();
  }
}

TEST_CASE("hamiltonian assembly") {
  const NetworkTopology topo = standard_topology(2, {2}, 2);
  ParameterVector params;
  params.h = RealVector::Zero(5);
  params.gamma = RealVector::Zero(8);

  CHECK(build_hamiltonian(topo, params).cwiseAbs().maxCoeff() == 0.0);

  NetworkTopology single;
  single.layer_sizes = {1, 1};
  single.hamiltonian_edges = {{0, 1}};
  single.lindblad_edges = {};
  ParameterVector p1;
  p1.h = RealVector::Ones(1);
  p1.gamma = RealVector(0);
  ComplexMatrix sx(2, 2);
  sx << 0, 1, 1, 0;
  CHECK((build_hamiltonian(single, p1) - sx).cwiseAbs().maxCoeff() == 0.0);

  params.h << 1, 2, 3, 4, 5;
  const ComplexMatrix h = build_hamiltonian(topo, params);
  CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
  int nonzero = 0;
  for (Index i = 0; i < h.rows(); ++i) {
    for (Index j = 0; j < h.cols(); ++j) {
      if (std::abs(h(i, j)) > 0.0) ++nonzero;
    }
  }
  CHECK(nonzero == 10);  // five mirrored pairs

  ParameterVector wrong;
  wrong.h = RealVector::Zero(4);
  wrong.gamma = RealVector::Zero(8);
  CHECK_THROWS_AS(build_hamiltonian(topo, wrong), DimensionError);
}

TEST_CASE("lindblad operators are single-entry rank-1") {
  NetworkTopology topo;
  topo.layer_sizes = {1, 2};
  topo.hamiltonian_edges = {};
  topo.lindblad_edges = {{0, 2}};
  ParameterVector params;
  params.h = RealVector(0);
  params.gamma = RealVector(1);
  params.gamma << 2.0;
  const auto ops = build_lindblad_ops(topo, params);
  REQUIRE(ops.size() == 1);
  CHECK(ops[0](2, 0) == Complex(2.0, 0.0));
  CHECK(ops[0].cwiseAbs().sum() == 2.0);

  const NetworkTopology t222 = standard_topology(2, {2}, 2);
  ParameterVector p;
  p.h = RealVector::Zero(5);
  p.gamma = RealVector::LinSpaced(8, 0.0, 0.7);
  const auto all = build_lindblad_ops(t222, p);
  CHECK(all.size() == 8);
  CHECK(all[0].cwiseAbs().maxCoeff() == 0.0);  // gamma = 0
  for (size_t k = 0; k < all.size(); ++k) {
    auto [from, to] = t222.lindblad_edges[k];
    ComplexMatrix residual = all[k];
    residual(to, from) = 0.0;
    CHECK(residual.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("encode_input embeds the state in the top-left block") {
  ComplexMatrix proj = ComplexMatrix::Zero(2, 2);
  proj(0, 0) = 1.0;
  const DensityMatrix rho(proj);

  const DensityMatrix big = encode_input(rho, 6);
  CHECK(big.dim() == 6);
  CHECK(big.population(0) == 1.0);
  for (Index i = 1; i < 6; ++i) CHECK(big.population(i) == 0.0);

  const DensityMatrix mixed(ComplexMatrix(0.5 * ComplexMatrix::Identity(2, 2)));
  const DensityMatrix enc = encode_input(mixed, 6);
  CHECK(enc.population(0) == 0.5);
  CHECK(enc.population(1) == 0.5);
  CHECK(std::abs(enc.matrix().trace() - Complex(1, 0)) < 1e-15);

  CHECK_THROWS_AS(encode_input(mixed, 1), DimensionError);
}

TEST_CASE("topology validation rejects malformed graphs") {
  NetworkTopology bad = standard_topology(2, {2}, 2);
  bad.hamiltonian_edges.push_back({3, 3});
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  NetworkTopology dup = standard_topology(2, {2}, 2);
  dup.lindblad_edges.push_back(dup.lindblad_edges.front());
  CHECK_THROWS_AS(dup.validate(), ConfigError);

  NetworkTopology range = standard_topology(2, {2}, 2);
  range.hamiltonian_edges.push_back({0, 6});
  CHECK_THROWS_AS(range.validate(), ConfigError);
}

TEST_CASE("parameter vector concat/split round trip") {
  ParameterVector p;
  p.h = RealVector(2);
  p.h << 1.0, -2.0;
  p.gamma = RealVector(3);
  p.gamma << 0.5, 0.0, 4.0;
  const RealVector all = p.concat();
  CHECK(all.size() == 5);
  const ParameterVector q = ParameterVector::split(all, 2);
  CHECK((q.h - p.h).cwiseAbs().maxCoeff() == 0.0);
  CHECK((q.gamma - p.gamma).cwiseAbs().maxCoeff() == 0.0);
}
