#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "oeg/lattice.hpp"
#include "oeg/quiver.hpp"

namespace oeg {

enum class Color { green, red };

using CVector = std::vector<IceQuiver::Entry>;
using CMatrix = std::vector<CVector>;

/// Color of mutable vertex k of a framed node: green iff its c-vector is
/// nonzero and nonnegative, red iff nonzero and nonpositive.
/// Throws SignCoherenceViolation otherwise.
Color vertex_color(const IceQuiver& node, int k);

/// Row i is the frozen part of row i of the node (an n x (m - n) matrix).
CMatrix c_matrix(const IceQuiver& node);
/// Rows sorted lexicographically.
CMatrix canonical_c_matrix(const IceQuiver& node);

struct ExchangeEdge {
  int source;
  int target;
  /// Mutated vertex, as a position of the source node's canonical form.
  int vertex;
  /// Position p of the target corresponds to position relabel[p] of the source.
  std::vector<int> relabel;
};

class OrientedExchangeGraph {
 public:
  OrientedExchangeGraph() = default;
  /// Rebuilds edges, orientation and relabelings from canonical node matrices.
  /// `initial_labels[p]` is the original vertex at position p of the source node.
  OrientedExchangeGraph(std::vector<IceQuiver> nodes, std::vector<int> initial_labels);

  int rank() const { return rank_; }
  const std::vector<IceQuiver>& nodes() const { return nodes_; }
  const std::vector<ExchangeEdge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int node) const { return out_[node]; }
  int source_node() const { return source_; }
  std::optional<int> sink_node() const { return sink_; }
  const std::vector<int>& initial_labels() const { return initial_labels_; }

  /// The transitive closure of the edges, as a lattice.
  FiniteLattice as_lattice() const;

 private:
  int rank_ = 0;
  std::vector<IceQuiver> nodes_;
  std::vector<ExchangeEdge> edges_;
  std::vector<std::vector<int>> out_;
  int source_ = -1;
  std::optional<int> sink_;
  std::vector<int> initial_labels_;
};

inline constexpr std::size_t default_node_cap = 10000;

/// Breadth-first closure of q_hat under mutation, deduplicated by canonical
/// form. q_hat must have m = 2n with its c-matrix a signed permutation
/// matrix. Throws NotFiniteType past `node_cap` nodes.
OrientedExchangeGraph build_exchange_graph(const IceQuiver& q_hat, std::size_t node_cap = default_node_cap);

/// Distinct nonnegative c-vectors over all nodes, sorted.
std::vector<CVector> positive_c_vectors(const OrientedExchangeGraph& g);

/// Maximal green sequence as vertices of the initial quiver (0-based).
using GreenSequence = std::vector<int>;

std::vector<GreenSequence> maximal_green_sequences(const OrientedExchangeGraph& g);
std::uint64_t count_maximal_green_sequences(const OrientedExchangeGraph& g);

struct GreenLengthSet {
  std::vector<int> lengths;  // sorted
  bool is_interval = false;
};

/// Lengths of source-to-sink paths, by memoized suffix sets.
GreenLengthSet green_length_set(const OrientedExchangeGraph& g);

}  // namespace oeg
