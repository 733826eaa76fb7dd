#include <algorithm>
#include <set>

#include "doctest.h"
#include "fwl/csl.hpp"
#include "fwl/errors.hpp"
#include "fwl/filtration.hpp"
#include "fwl/kernels.hpp"
#include "fwl/weights.hpp"

using namespace fwl;

TEST_SUITE("csl") {
  TEST_CASE("construction") {
    const auto g = csl_graph(41, 2);
    CHECK(g.vertex_count() == 41);
    CHECK(g.edge_count() == 82);
    for (Vertex v = 0; v < 41; ++v) CHECK(vertex_degree(g, v) == 4);

    const auto h = csl_graph(8, 3);
    CHECK(h.vertex_count() == 8);
    CHECK(h.edge_count() == 16);
    for (Vertex v = 0; v < 8; ++v) CHECK(vertex_degree(h, v) == 4);
    CHECK(h.has_edge(0, 3));
    CHECK(h.has_edge(0, 5));
  }

  TEST_CASE("invalid parameters name the bound") {
    CHECK_THROWS_WITH_AS(csl_graph(8, 4), doctest::Contains("2s < n"), ArgumentError);
    CHECK_THROWS_WITH_AS(csl_graph(8, 1), doctest::Contains("s >= 2"), ArgumentError);
    CHECK_THROWS_WITH_AS(csl_graph(4, 2), doctest::Contains("n >= 5"), ArgumentError);
    CHECK_THROWS_AS(generate_csl(41, 2, 0, 1), ArgumentError);
  }

  TEST_CASE("benchmark sizes, labels and determinism") {
    const auto ds = generate_csl_benchmark(10, 7);
    CHECK(ds.size() == 100);
    CHECK(std::set(ds.class_labels.begin(), ds.class_labels.end()).size() == 10);
    CHECK(ds.class_labels.front() == 2);
    CHECK(ds.class_labels.back() == 16);
    CHECK(generate_csl_benchmark(10, 7) == ds);
    CHECK_FALSE(generate_csl_benchmark(10, 8) == ds);
    // Copies are relabelings, not the same adjacency.
    CHECK_FALSE(ds.graphs[0] == ds.graphs[1]);
    CHECK(generate_csl_benchmark(1, 7).size() == 10);
  }

  TEST_CASE("random_permutation is a bijection and pinned for a seed") {
    const auto p = random_permutation(10, 42);
    auto s = p;
    std::sort(s.begin(), s.end());
    for (Vertex i = 0; i < 10; ++i) CHECK(s[i] == i);
    CHECK(random_permutation(10, 42) == p);
  }

  TEST_CASE("distinct walk weights per lambda") {
    // lambda : number of distinct weights over the ten base graphs.
    const std::pair<unsigned, std::size_t> expected[] = {{1, 1}, {2, 3},  {3, 4},  {4, 7},
                                                         {5, 9}, {6, 14}, {7, 18}, {8, 19}};
    const auto ds = generate_csl_benchmark(1, 0);
    for (auto [lambda, k] : expected) {
      std::vector<double> pooled;
      for (const auto& g : ds.graphs) {
        const auto w = weight_walks(g, lambda);
        pooled.insert(pooled.end(), w.begin(), w.end());
      }
      CHECK(fit_thresholds_auto(pooled).size() == k);
    }
  }

  TEST_CASE("kernel values are invariant under the generator's permutations") {
    const auto ds = generate_csl(41, 5, 4, 99);
    KernelConfig c;
    c.h = 2;
    const auto m = gram_matrix(ds, {WeightKind::walks, 4}, FiltrationLength::all_distinct(), c);
    for (std::size_t i = 0; i < m.n; ++i)
      for (std::size_t j = 0; j < m.n; ++j) CHECK(m(i, j) == m(0, 0));
  }
}
