#include "fwl/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fwl/errors.hpp"

namespace fwl {

LabeledGraph LabeledGraph::from_edges(std::size_t vertex_count, std::vector<VertexLabel> labels,
                                      std::span<const Edge> edges, std::vector<double> weights) {
  if (labels.empty()) labels.assign(vertex_count, 0);
  if (labels.size() != vertex_count)
    throw ArgumentError("label count " + std::to_string(labels.size()) +
                        " does not match vertex count " + std::to_string(vertex_count));
  if (weights.empty()) weights.assign(edges.size(), 0.0);
  if (weights.size() != edges.size())
    throw ArgumentError("weight count does not match edge count");

  // Canonical orientation u < v, then sort edges (carrying weights).
  std::vector<std::size_t> order(edges.size());
  std::vector<Edge> canon(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u >= vertex_count || v >= vertex_count)
      throw ArgumentError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") references a vertex outside 0.." + std::to_string(vertex_count));
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i]))
      throw ArgumentError("edge weights must be finite and nonnegative");
    canon[i] = u < v ? Edge{u, v} : Edge{v, u};
  }
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(canon[a].u, canon[a].v) < std::pair(canon[b].u, canon[b].v);
  });

  LabeledGraph g;
  g.labels_ = std::move(labels);
  g.edges_.reserve(edges.size());
  g.weights_.reserve(edges.size());
  for (std::size_t idx : order) {
    if (!g.edges_.empty() && g.edges_.back() == canon[idx])
      throw ArgumentError("parallel edge (" + std::to_string(canon[idx].u) + "," +
                          std::to_string(canon[idx].v) + ")");
    g.edges_.push_back(canon[idx]);
    g.weights_.push_back(weights[idx]);
  }

  std::vector<std::size_t> degree(vertex_count, 0);
  for (auto [u, v] : g.edges_) {
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.neighbors_.resize(g.offsets_.back());
  g.incident_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // With edges in (u, v) order every (w, x), w < x, precedes every (x, y), so
  // each neighbor list comes out sorted.
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    auto [u, v] = g.edges_[e];
    g.neighbors_[fill[u]] = v;
    g.incident_[fill[u]++] = e;
    g.neighbors_[fill[v]] = u;
    g.incident_[fill[v]++] = e;
  }
  return g;
}

bool LabeledGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

LabeledGraph LabeledGraph::with_weights(std::vector<double> weights) const {
  if (weights.size() != edges_.size()) throw ArgumentError("weight count does not match edge count");
  for (double w : weights)
    if (!(w >= 0.0) || !std::isfinite(w))
      throw ArgumentError("edge weights must be finite and nonnegative");
  LabeledGraph g = *this;
  g.weights_ = std::move(weights);
  return g;
}

void GraphDataset::validate() const {
  if (class_labels.size() != graphs.size())
    throw ArgumentError("dataset '" + name + "' has " + std::to_string(graphs.size()) +
                        " graphs but " + std::to_string(class_labels.size()) + " class labels");
}

std::size_t vertex_degree(const LabeledGraph& g, Vertex v) {
  if (v >= g.vertex_count())
    throw ArgumentError("vertex " + std::to_string(v) + " out of range (vertex count " +
                        std::to_string(g.vertex_count()) + ")");
  return g.neighbors(v).size();
}

LabeledGraph permute_graph(const LabeledGraph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) throw ArgumentError("permutation length does not match vertex count");
  std::vector<bool> seen(n, false);
  for (Vertex p : perm) {
    if (p >= n || seen[p]) throw ArgumentError("permutation is not a bijection on 0.." + std::to_string(n));
    seen[p] = true;
  }
  std::vector<VertexLabel> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[perm[v]] = g.vertex_labels()[v];
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
  std::vector<double> weights(g.edge_weights().begin(), g.edge_weights().end());
  return LabeledGraph::from_edges(n, std::move(labels), edges, std::move(weights));
}

}  // namespace fwl
