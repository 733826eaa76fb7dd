#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fwl/graph.hpp"

namespace fwl {

enum class WeightKind { native, degree, walks, triangles };

struct WeightFunctionSpec {
  WeightKind kind = WeightKind::native;
  /// Maximal walk length, used only by `walks`.
  unsigned lambda = 1;

  /// Throws ArgumentError when lambda < 1 for walks.
  void validate() const;
};

std::string to_string(WeightKind kind);
/// Throws ArgumentError for unknown names.
WeightKind parse_weight_kind(const std::string& name);

/// Per-edge weights indexed by EdgeId.
using EdgeWeights = std::vector<double>;

/// w({u,v}) = max(deg u, deg v).
EdgeWeights weight_degree(const LabeledGraph& g);

/// w({u,v}) = number of walks of length 1..lambda from u to v. Counted
/// exactly in 64-bit unsigned arithmetic; throws OverflowError if a count
/// leaves that range.
EdgeWeights weight_walks(const LabeledGraph& g, unsigned lambda);

/// w({u,v}) = number of triangles containing the edge, |N(u) ∩ N(v)|.
EdgeWeights weight_triangles(const LabeledGraph& g);

/// Applies `spec` to `g`; `native` keeps the stored weights.
LabeledGraph apply_weights(const LabeledGraph& g, const WeightFunctionSpec& spec);

}  // namespace fwl
