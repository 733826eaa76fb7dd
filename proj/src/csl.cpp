#include "fwl/csl.hpp"

#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "fwl/errors.hpp"

namespace fwl {
namespace {

// Uniform integer in [0, bound) without modulo bias.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[bounded(rng, i)]);
  return perm;
}

LabeledGraph csl_graph(unsigned n, unsigned s) {
  if (n < 5) throw ArgumentError("CSL graph needs n >= 5, got n = " + std::to_string(n));
  if (s < 2) throw ArgumentError("CSL skip must satisfy s >= 2, got s = " + std::to_string(s));
  if (2 * s >= n)
    throw ArgumentError("CSL skip must satisfy 2s < n, got n = " + std::to_string(n) +
                        ", s = " + std::to_string(s));
  std::vector<Edge> edges;
  edges.reserve(2 * n);
  for (Vertex i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
    edges.push_back({i, (i + s) % n});
  }
  return LabeledGraph::from_edges(n, {}, edges);
}

GraphDataset generate_csl(unsigned n, unsigned s, unsigned copies, std::uint64_t seed) {
  if (copies < 1) throw ArgumentError("copies must be >= 1");
  GraphDataset ds;
  ds.name = "CSL_" + std::to_string(n) + "_" + std::to_string(s);
  const LabeledGraph base = csl_graph(n, s);
  ds.graphs.push_back(base);
  // One stream per (seed, n, s, copy) so classes do not depend on each other.
  for (unsigned c = 1; c < copies; ++c) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), n, s, c};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    const std::uint64_t sub = (std::uint64_t{words[0]} << 32) | words[1];
    ds.graphs.push_back(permute_graph(base, random_permutation(n, sub)));
  }
  ds.class_labels.assign(copies, s);
  return ds;
}

GraphDataset generate_csl_benchmark(unsigned copies, std::uint64_t seed) {
  GraphDataset ds;
  ds.name = "CSL";
  for (unsigned s : kCslSkips) {
    GraphDataset part = generate_csl(kCslVertices, s, copies, seed);
    ds.graphs.insert(ds.graphs.end(), part.graphs.begin(), part.graphs.end());
    ds.class_labels.insert(ds.class_labels.end(), part.class_labels.begin(), part.class_labels.end());
  }
  return ds;
}

}  // namespace fwl
