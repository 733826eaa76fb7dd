#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fwl {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
/// Discrete vertex label as read from the input (before interning).
using VertexLabel = std::int64_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with discrete vertex labels and nonnegative edge
/// weights. Adjacency is stored in CSR form with neighbors sorted by index.
/// Immutable after construction.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Builds a graph from an undirected edge list. Each edge must appear once
  /// (in either orientation). Empty `labels` means all labels are 0, empty
  /// `weights` means all weights are 0. Throws ArgumentError on self-loops,
  /// parallel edges, out-of-range endpoints, negative or non-finite weights.
  static LabeledGraph from_edges(std::size_t vertex_count, std::vector<VertexLabel> labels,
                                 std::span<const Edge> edges, std::vector<double> weights = {});

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }

  /// Edges with u < v, ordered lexicographically.
  std::span<const Edge> edges() const { return edges_; }
  std::span<const double> edge_weights() const { return weights_; }
  std::span<const VertexLabel> vertex_labels() const { return labels_; }

  double weight(EdgeId e) const { return weights_[e]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Same vertices, labels and edges with a new weight per edge (indexed by
  /// EdgeId).
  LabeledGraph with_weights(std::vector<double> weights) const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<EdgeId> incident_;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
};

struct GraphDataset {
  std::string name;
  std::vector<LabeledGraph> graphs;
  std::vector<std::int64_t> class_labels;

  std::size_t size() const { return graphs.size(); }
  /// Throws ArgumentError when class_labels and graphs differ in length.
  void validate() const;
  friend bool operator==(const GraphDataset&, const GraphDataset&) = default;
};

/// Throws ArgumentError when v is out of range.
std::size_t vertex_degree(const LabeledGraph& g, Vertex v);

/// Relabels vertex i as perm[i]. Labels and edge weights travel with their
/// vertices and edges. Throws ArgumentError if perm is not a bijection.
LabeledGraph permute_graph(const LabeledGraph& g, std::span<const Vertex> perm);

}  // namespace fwl
