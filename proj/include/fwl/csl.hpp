#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fwl/graph.hpp"

namespace fwl {

/// Skip values for n = 41 that give pairwise non-isomorphic CSL graphs.
inline constexpr std::array<unsigned, 10> kCslSkips{2, 3, 4, 5, 6, 9, 11, 12, 13, 16};
inline constexpr unsigned kCslVertices = 41;

/// Uniform random permutation of 0..n-1 by Fisher-Yates on std::mt19937_64,
/// bounded draws by rejection. Reproducible across platforms for a seed.
std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed);

/// Circular skip link graph: cycle i ~ i+1 plus chords i ~ i+s (mod n).
/// Requires n >= 5 and 2 <= s with 2s < n; throws ArgumentError otherwise.
LabeledGraph csl_graph(unsigned n, unsigned s);

/// csl_graph(n, s) followed by copies-1 random relabelings; class label s.
GraphDataset generate_csl(unsigned n, unsigned s, unsigned copies, std::uint64_t seed);

/// generate_csl(41, s, copies, seed) over all kCslSkips.
GraphDataset generate_csl_benchmark(unsigned copies, std::uint64_t seed);

}  // namespace fwl
