#include <random>

#include "doctest.h"
#include "fwl/errors.hpp"
#include "fwl/weights.hpp"
#include "support/oracles.hpp"

using namespace fwl;
using namespace fwl::testing;

TEST_SUITE("weights") {
  TEST_CASE("max-degree weights") {
    CHECK(weight_degree(path3()) == EdgeWeights{2, 2});
    CHECK(weight_degree(triangle()) == EdgeWeights{2, 2, 2});
    CHECK(weight_degree(star(4)) == EdgeWeights{4, 4, 4, 4});
    CHECK(weight_degree(LabeledGraph::from_edges(2, {}, {})).empty());
  }

  TEST_CASE("walk-count weights, hand examples") {
    // K3, lambda 2: one direct walk plus one through the third vertex.
    CHECK(enumerate_walks(triangle(), 0, 1, 2) == 2);
    CHECK(weight_walks(triangle(), 2) == EdgeWeights{2, 2, 2});
    // Path: no length-2 walk joins adjacent vertices.
    CHECK(walks_by_matrix_powers(path3(), 0, 1, 2) == 1);
    CHECK(weight_walks(path3(), 2) == EdgeWeights{1, 1});
    // lambda = 1 collapses to constant weights.
    for (double w : weight_walks(prism(), 1)) CHECK(w == 1.0);
    CHECK_THROWS_AS(weight_walks(path3(), 0), ArgumentError);
  }

  TEST_CASE("walk-count weights match enumeration on small graphs") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const auto g = random_graph(rng, 6, 0.5, 0, 0);
      for (unsigned lambda = 1; lambda <= 4; ++lambda) {
        const auto w = weight_walks(g, lambda);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          const auto [u, v] = g.edges()[e];
          const auto expected = enumerate_walks(g, u, v, lambda);
          CHECK(w[e] == static_cast<double>(expected));
          CHECK(expected == walks_by_matrix_powers(g, v, u, lambda));
        }
      }
    }
  }

  TEST_CASE("walk-count overflow is reported with lambda") {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 20; ++u)
      for (Vertex v = u + 1; v < 20; ++v) edges.push_back({u, v});
    const auto k20 = LabeledGraph::from_edges(20, {}, edges);
    try {
      weight_walks(k20, 20);
      FAIL("expected OverflowError");
    } catch (const OverflowError& e) {
      CHECK(std::string(e.what()).find("lambda = 20") != std::string::npos);
    }
    CHECK_NOTHROW(weight_walks(k20, 10));
  }

  TEST_CASE("triangle weights") {
    // Two triangles joined by a matching: triangle edges 1, matching edges 0.
    const auto g = prism();
    const auto w = weight_triangles(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto [u, v] = g.edges()[e];
      const bool matching = (u < 3) != (v < 3);
      CHECK(w[e] == (matching ? 0.0 : 1.0));
    }
    for (double x : weight_triangles(k33())) CHECK(x == 0.0);
    for (double x : weight_triangles(complete4())) CHECK(x == 2.0);
  }

  TEST_CASE("spec parsing and application") {
    CHECK(parse_weight_kind("walks") == WeightKind::walks);
    CHECK_THROWS_AS(parse_weight_kind("pagerank"), ArgumentError);
    WeightFunctionSpec bad{WeightKind::walks, 0};
    CHECK_THROWS_AS(bad.validate(), ArgumentError);
    const Edge e[] = {{0, 1}};
    const auto g = LabeledGraph::from_edges(2, {}, e, {3.5});
    CHECK(apply_weights(g, {WeightKind::native, 1}).weight(0) == 3.5);
    CHECK(apply_weights(g, {WeightKind::degree, 1}).weight(0) == 1.0);
  }
}
