#include "fwl/weights.hpp"

#include <algorithm>
#include <iterator>

#include "fwl/errors.hpp"

namespace fwl {

void WeightFunctionSpec::validate() const {
  if (kind == WeightKind::walks && lambda < 1)
    throw ArgumentError("walk length bound lambda must be >= 1");
}

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::native: return "native";
    case WeightKind::degree: return "degree";
    case WeightKind::walks: return "walks";
    case WeightKind::triangles: return "triangles";
  }
  return "?";
}

WeightKind parse_weight_kind(const std::string& name) {
  for (auto k : {WeightKind::native, WeightKind::degree, WeightKind::walks, WeightKind::triangles})
    if (to_string(k) == name) return k;
  throw ArgumentError("unknown weight function '" + name + "'");
}

EdgeWeights weight_degree(const LabeledGraph& g) {
  EdgeWeights w;
  w.reserve(g.edge_count());
  for (auto [u, v] : g.edges())
    w.push_back(static_cast<double>(std::max(g.neighbors(u).size(), g.neighbors(v).size())));
  return w;
}

EdgeWeights weight_walks(const LabeledGraph& g, unsigned lambda) {
  if (lambda < 1) throw ArgumentError("walk length bound lambda must be >= 1");
  const std::size_t n = g.vertex_count();
  EdgeWeights w(g.edge_count(), 0.0);
  std::vector<std::uint64_t> walks(n), next(n), total(n);

  // One source at a time: walks[x] = number of length-l walks from `source`
  // to x, advanced by one adjacency product per step.
  for (Vertex source = 0; source < n; ++source) {
    if (g.neighbors(source).empty()) continue;
    std::fill(walks.begin(), walks.end(), 0);
    std::fill(total.begin(), total.end(), 0);
    walks[source] = 1;
    for (unsigned step = 1; step <= lambda; ++step) {
      for (Vertex x = 0; x < n; ++x) {
        std::uint64_t acc = 0;
        for (Vertex y : g.neighbors(x))
          if (__builtin_add_overflow(acc, walks[y], &acc))
            throw OverflowError("walk count overflows 64 bits for lambda = " +
                                std::to_string(lambda));
        next[x] = acc;
      }
      walks.swap(next);
      for (Vertex x = 0; x < n; ++x)
        if (__builtin_add_overflow(total[x], walks[x], &total[x]))
          throw OverflowError("walk count overflows 64 bits for lambda = " +
                              std::to_string(lambda));
    }
    auto nb = g.neighbors(source);
    auto eid = g.incident_edges(source);
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (source < nb[i]) w[eid[i]] = static_cast<double>(total[nb[i]]);
  }
  return w;
}

EdgeWeights weight_triangles(const LabeledGraph& g) {
  EdgeWeights w;
  w.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::size_t common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++common;
        ++i;
        ++j;
      }
    }
    w.push_back(static_cast<double>(common));
  }
  return w;
}

LabeledGraph apply_weights(const LabeledGraph& g, const WeightFunctionSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case WeightKind::native: return g;
    case WeightKind::degree: return g.with_weights(weight_degree(g));
    case WeightKind::walks: return g.with_weights(weight_walks(g, spec.lambda));
    case WeightKind::triangles: return g.with_weights(weight_triangles(g));
  }
  return g;
}

}  // namespace fwl
