#include "qsnn/network.hpp"

#include <numeric>
#include <set>
#include <string>

namespace qsnn {

int NetworkTopology::dim() const {
  return std::accumulate(layer_sizes.begin(), layer_sizes.end(), 0);
}

void NetworkTopology::validate() const {
  if (layer_sizes.size() < 2) {
    throw ConfigError("topology: need at least input and output layers");
  }
  for (int s : layer_sizes) {
    if (s < 1) throw ConfigError("topology: layer sizes must be >= 1");
  }
  const int n = dim();
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : hamiltonian_edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw ConfigError("topology: Hamiltonian edge index out of range");
    }
    if (i == j) throw ConfigError("topology: Hamiltonian self-loop");
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second) {
      throw ConfigError("topology: duplicate Hamiltonian edge");
    }
  }
  seen.clear();
  for (auto [from, to] : lindblad_edges) {
    if (from < 0 || to < 0 || from >= n || to >= n) {
      throw ConfigError("topology: Lindblad edge index out of range");
    }
    if (!seen.insert({from, to}).second) {
      throw ConfigError("topology: duplicate Lindblad edge");
    }
  }
}

RealVector ParameterVector::concat() const {
  RealVector all(size());
  all.head(h.size()) = h;
  all.tail(gamma.size()) = gamma;
  return all;
}

ParameterVector ParameterVector::split(const RealVector& all, Index h_count) {
  if (h_count > all.size()) {
    throw DimensionError("ParameterVector::split: h_count exceeds length");
  }
  return {all.head(h_count), all.tail(all.size() - h_count)};
}

NetworkTopology standard_topology(int input, const std::vector<int>& hidden,
                                  int output) {
  NetworkTopology topo;
  topo.layer_sizes.push_back(input);
  topo.layer_sizes.insert(topo.layer_sizes.end(), hidden.begin(),
                          hidden.end());
  topo.layer_sizes.push_back(output);

  // Neuron index ranges per layer.
  std::vector<int> offsets{0};
  for (int s : topo.layer_sizes) offsets.push_back(offsets.back() + s);

  // Couplings inside the input layer.
  for (int i = 0; i < input; ++i) {
    for (int j = i + 1; j < input; ++j) {
      topo.hamiltonian_edges.emplace_back(i, j);
    }
  }
  // Couplings between the input layer and the layer after it.
  for (int i = 0; i < input; ++i) {
    for (int j = offsets[1]; j < offsets[2]; ++j) {
      topo.hamiltonian_edges.emplace_back(i, j);
    }
  }
  // Dissipation between every pair of adjacent layers, toward the output.
  const int layers = static_cast<int>(topo.layer_sizes.size());
  for (int l = 0; l + 1 < layers; ++l) {
    for (int from = offsets[l]; from < offsets[l + 1]; ++from) {
      for (int to = offsets[l + 1]; to < offsets[l + 2]; ++to) {
        topo.lindblad_edges.emplace_back(from, to);
      }
    }
  }
  topo.validate();
  return topo;
}

namespace {

void require_lengths(const NetworkTopology& topo,
                     const ParameterVector& params) {
  if (params.h.size() !=
          static_cast<Index>(topo.hamiltonian_edges.size()) ||
      params.gamma.size() != static_cast<Index>(topo.lindblad_edges.size())) {
    throw DimensionError("parameter vector does not match topology edges");
  }
}

}  // namespace

ComplexMatrix build_hamiltonian(const NetworkTopology& topo,
                                const ParameterVector& params) {
  require_lengths(topo, params);
  const int n = topo.dim();
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (size_t k = 0; k < topo.hamiltonian_edges.size(); ++k) {
    auto [i, j] = topo.hamiltonian_edges[k];
    h(i, j) += params.h(static_cast<Index>(k));
    h(j, i) += params.h(static_cast<Index>(k));
  }
  return h;
}

std::vector<ComplexMatrix> build_lindblad_ops(const NetworkTopology& topo,
                                              const ParameterVector& params) {
  require_lengths(topo, params);
  const int n = topo.dim();
  std::vector<ComplexMatrix> ops;
  ops.reserve(topo.lindblad_edges.size());
  for (size_t k = 0; k < topo.lindblad_edges.size(); ++k) {
    auto [from, to] = topo.lindblad_edges[k];
    ComplexMatrix l = ComplexMatrix::Zero(n, n);
    l(to, from) = params.gamma(static_cast<Index>(k));
    ops.push_back(std::move(l));
  }
  return ops;
}

DensityMatrix encode_input(const DensityMatrix& rho, int network_dim) {
  const Index n = rho.dim();
  if (n > network_dim) {
    throw DimensionError("encode_input: input state dimension " +
                         std::to_string(n) + " exceeds network dimension " +
                         std::to_string(network_dim));
  }
  ComplexMatrix full = ComplexMatrix::Zero(network_dim, network_dim);
  full.topLeftCorner(n, n) = rho.matrix();
  return DensityMatrix(std::move(full));
}

}  // namespace qsnn
