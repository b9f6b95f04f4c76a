#pragma once

#include <utility>
#include <vector>

#include "qsnn/density_matrix.hpp"
#include "qsnn/types.hpp"

namespace qsnn {

/// Layered neuron graph. Neurons are numbered 0..N-1 layer by layer, input
/// layer first. Hamiltonian edges are unordered pairs {i, j}; Lindblad
/// edges are directed (from, to) and transfer population from neuron
/// `from` into neuron `to`.
struct NetworkTopology {
  std::vector<int> layer_sizes;
  std::vector<std::pair<int, int>> hamiltonian_edges;  // stored with i < j
  std::vector<std::pair<int, int>> lindblad_edges;     // (from, to)

  int dim() const;
  int input_size() const { return layer_sizes.front(); }
  int output_size() const { return layer_sizes.back(); }
  /// Index of the first output-layer neuron.
  int output_offset() const { return dim() - output_size(); }

  /// Checks index ranges, no self-loops, no duplicate edges.
  void validate() const;
};

/// Trainable degrees of freedom: one coupling h_k per Hamiltonian edge and
/// one signed dissipation amplitude gamma_k per Lindblad edge (the
/// effective rate is gamma_k^2).
struct ParameterVector {
  RealVector h;
  RealVector gamma;

  Index size() const { return h.size() + gamma.size(); }

  /// Concatenated (h, gamma) vector, the order used by gradients.
  RealVector concat() const;
  static ParameterVector split(const RealVector& all, Index h_count);
};

/// Layered network used throughout: Lindblad edges fully bipartite between
/// every pair of adjacent layers (directed toward the output); Hamiltonian
/// edges between every pair of input neurons and fully bipartite between
/// the input layer and the layer after it.
NetworkTopology standard_topology(int input, const std::vector<int>& hidden,
                                  int output);

/// H = sum_k h_k (|i><j| + |j><i|) over Hamiltonian edges.
ComplexMatrix build_hamiltonian(const NetworkTopology& topo,
                                const ParameterVector& params);

/// One rank-1 operator gamma_k |to><from| per Lindblad edge.
std::vector<ComplexMatrix> build_lindblad_ops(const NetworkTopology& topo,
                                              const ParameterVector& params);

/// Embeds an n-dim input state as the top-left block of an N-dim network
/// state, zero elsewhere.
DensityMatrix encode_input(const DensityMatrix& rho, int network_dim);

}  // namespace qsnn
