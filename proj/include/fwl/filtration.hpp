#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fwl/graph.hpp"

namespace fwl {

/// Strictly decreasing edge-weight thresholds a_1 > ... > a_k. Level i keeps
/// the edges of weight >= a_i, so levels are nested and the last one (a_k at
/// or below every weight) is the whole graph.
struct Filtration {
  std::vector<double> thresholds;
  /// Length that was asked for; larger than size() when the data had fewer
  /// distinct weights.
  std::size_t requested_length = 0;

  std::size_t size() const { return thresholds.size(); }
  /// Throws ArgumentError unless nonempty and strictly decreasing.
  void validate() const;
  friend bool operator==(const Filtration&, const Filtration&) = default;
};

/// Clusters the distinct weight values into k contiguous groups minimizing
/// the within-group sum of squared deviations (exact DP), and returns the
/// group minima in decreasing order. Ties prefer a smaller lowest group.
/// If there are fewer than k distinct values the length drops to their count.
Filtration fit_thresholds(std::span<const double> weights, std::size_t k);

/// One threshold per distinct weight value.
Filtration fit_thresholds_auto(std::span<const double> weights);

/// Subgraph on the same vertex set keeping the edges with weight >= alpha.
LabeledGraph filtration_graph(const LabeledGraph& g, double alpha);

/// Edge-weight multiset pooled over a dataset.
std::vector<double> pooled_weights(const GraphDataset& dataset);

}  // namespace fwl
