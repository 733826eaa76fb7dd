#include "fwl/filtration.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "fwl/errors.hpp"

namespace fwl {
namespace {

std::vector<double> distinct_sorted(std::span<const double> weights) {
  if (weights.empty()) throw ArgumentError("cannot fit thresholds on an empty weight multiset");
  std::vector<double> values(weights.begin(), weights.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

/// Optimal 1-D k-means on sorted values. Returns the start index of every
/// cluster (first is always 0).
std::vector<std::size_t> kmeans_1d(const std::vector<double>& x, std::size_t k) {
  const std::size_t d = x.size();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(d);
  std::vector<double> s1(d + 1, 0.0), s2(d + 1, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    const double c = x[i] - mean;
    s1[i + 1] = s1[i] + c;
    s2[i + 1] = s2[i] + c * c;
  }
  // Cost of one cluster holding x[i..j).
  auto sse = [&](std::size_t i, std::size_t j) {
    const double sum = s1[j] - s1[i];
    const double cost = s2[j] - s2[i] - sum * sum / static_cast<double>(j - i);
    return std::max(cost, 0.0);
  };

  constexpr double inf = std::numeric_limits<double>::infinity();
  // cost[c][j]: best cost of c+1 clusters over x[0..j); split[c][j]: start of
  // the last of those clusters.
  std::vector<std::vector<double>> cost(k, std::vector<double>(d + 1, inf));
  std::vector<std::vector<std::size_t>> split(k, std::vector<std::size_t>(d + 1, 0));
  for (std::size_t j = 1; j <= d; ++j) cost[0][j] = sse(0, j);

  // The leftmost optimal split is monotone in j (SSE is Monge), so each row
  // is filled by divide and conquer.
  for (std::size_t c = 1; c < k; ++c) {
    const auto& prev = cost[c - 1];
    auto& row = cost[c];
    auto& arg = split[c];
    std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> solve =
        [&](std::size_t lo, std::size_t hi, std::size_t opt_lo, std::size_t opt_hi) {
          if (lo > hi) return;
          const std::size_t mid = lo + (hi - lo) / 2;
          double best = inf;
          std::size_t best_i = opt_lo;
          const std::size_t last = std::min(opt_hi, mid - 1);
          for (std::size_t i = opt_lo; i <= last; ++i) {
            const double v = prev[i] + sse(i, mid);
            if (v < best) {
              best = v;
              best_i = i;
            }
          }
          row[mid] = best;
          arg[mid] = best_i;
          if (mid > lo) solve(lo, mid - 1, opt_lo, best_i);
          solve(mid + 1, hi, best_i, opt_hi);
        };
    // c+1 clusters need at least c+1 points; the previous row holds c
    // clusters so the split index is at least c.
    solve(c + 1, d, c, d - 1);
  }

  std::vector<std::size_t> starts(k);
  std::size_t end = d;
  for (std::size_t c = k; c-- > 0;) {
    starts[c] = c == 0 ? 0 : split[c][end];
    end = starts[c];
  }
  return starts;
}

}  // namespace

void Filtration::validate() const {
  if (thresholds.empty()) throw ArgumentError("filtration must have at least one threshold");
  for (std::size_t i = 1; i < thresholds.size(); ++i)
    if (!(thresholds[i - 1] > thresholds[i]))
      throw ArgumentError("filtration thresholds must be strictly decreasing");
}

Filtration fit_thresholds(std::span<const double> weights, std::size_t k) {
  if (k < 1) throw ArgumentError("filtration length k must be >= 1");
  const std::vector<double> values = distinct_sorted(weights);
  const std::size_t length = std::min(k, values.size());
  const auto starts = kmeans_1d(values, length);
  Filtration f;
  f.requested_length = k;
  for (std::size_t c = length; c-- > 0;) f.thresholds.push_back(values[starts[c]]);
  return f;
}

Filtration fit_thresholds_auto(std::span<const double> weights) {
  std::vector<double> values = distinct_sorted(weights);
  Filtration f;
  f.thresholds.assign(values.rbegin(), values.rend());
  f.requested_length = f.thresholds.size();
  return f;
}

LabeledGraph filtration_graph(const LabeledGraph& g, double alpha) {
  std::vector<Edge> edges;
  std::vector<double> weights;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.weight(e) >= alpha) {
      edges.push_back(g.edges()[e]);
      weights.push_back(g.weight(e));
    }
  }
  return LabeledGraph::from_edges(
      g.vertex_count(), std::vector<VertexLabel>(g.vertex_labels().begin(), g.vertex_labels().end()),
      edges, std::move(weights));
}

std::vector<double> pooled_weights(const GraphDataset& dataset) {
  std::vector<double> all;
  for (const auto& g : dataset.graphs) all.insert(all.end(), g.edge_weights().begin(), g.edge_weights().end());
  return all;
}

}  // namespace fwl
