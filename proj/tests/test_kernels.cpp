#include <cmath>
#include <random>

#include "doctest.h"
#include "fwl/errors.hpp"
#include "fwl/kernels.hpp"
#include "support/oracles.hpp"

using namespace fwl;
using namespace fwl::testing;

namespace {

GraphDataset dataset_of(std::vector<LabeledGraph> graphs) {
  GraphDataset ds;
  ds.name = "t";
  ds.class_labels.assign(graphs.size(), 0);
  ds.graphs = std::move(graphs);
  return ds;
}

// Kernel distance K(a,a) + K(b,b) - 2 K(a,b).
double distance(const GramMatrix& m, std::size_t a, std::size_t b) {
  return m(a, a) + m(b, b) - 2 * m(a, b);
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("configuration checks") {
    KernelConfig c;
    c.gamma = 0.0;
    CHECK_THROWS_AS(c.validate(), ArgumentError);
    c.gamma = 1.0;
    c.variant = KernelVariant::product;
    c.beta = 0.0;
    CHECK_THROWS_AS(c.validate(), ArgumentError);
    c.beta = 0.5;
    CHECK_NOTHROW(c.validate());
    CHECK(parse_variant("product") == KernelVariant::product);
    CHECK_THROWS_AS(parse_variant("sum"), ArgumentError);
  }

  TEST_CASE("pair kernels on hand-built tables") {
    const GroundLine one(std::vector<double>{0.0});
    const FeatureTable a(1, {0, 2}, {3, 1}), b(1, {1, 3}, {2, 2}), c(1, {0}, {1});
    SUBCASE("disjoint features") {
      CHECK(filtration_kernel_pair(a, b, one, 1.0) == 0.0);
      CHECK(histogram_kernel_pair(a, b) == 0.0);
    }
    SUBCASE("mass RBF on one shared feature, masses 3 vs 1") {
      const FeatureTable a3(1, {0}, {3});
      CHECK(product_kernel_pair(a3, c, one, 1.0, 0.25) ==
            doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    }
    SUBCASE("product of a table with itself is 1") {
      CHECK(product_kernel_pair(a, a, one, 1.0, 0.7) == 1.0);
    }
    SUBCASE("level mismatch") {
      const GroundLine two(std::vector<double>{1.0, 0.0});
      CHECK_THROWS_AS(filtration_kernel_pair(a, b, two, 1.0), ArgumentError);
      CHECK_THROWS_AS(product_kernel_pair(a, b, two, 1.0, 1.0), ArgumentError);
      const FeatureTable t2(2, {0}, {1, 1});
      CHECK_THROWS_AS(histogram_kernel_pair(t2, t2), ArgumentError);
    }
  }

  TEST_CASE("single edge, k = 1, h = 0: value 4") {
    const Edge e[] = {{0, 1}};
    const auto g = LabeledGraph::from_edges(2, {}, e);
    LabelInterner in;
    const auto t = extract_features(g, Filtration{{0.0}, 1}, 0, in);
    const GroundLine line(std::vector<double>{0.0});
    CHECK(filtration_kernel_pair(t, t, line, 1.0) == 4.0);
    CHECK(histogram_kernel_pair(t, t) == 4.0);
  }

  TEST_CASE("histogram kernel examples") {
    LabelInterner in;
    const Filtration f{{0.0}, 1};
    const auto v = LabeledGraph::from_edges(1, {}, {});
    CHECK(histogram_kernel_pair(extract_features(v, f, 0, in), extract_features(v, f, 0, in)) == 1.0);
    // Triangle, h = 1: depth-0 label 3*3 plus depth-1 label 3*3.
    const auto t = extract_features(triangle(), f, 1, in);
    CHECK(t.feature_count() == 2);
    CHECK(histogram_kernel_pair(t, t) == 18.0);
  }

  TEST_CASE("k = 1 reductions on random labeled graphs against string-label WL") {
    std::mt19937_64 rng(71);
    std::vector<LabeledGraph> graphs;
    for (int i = 0; i < 25; ++i) graphs.push_back(random_graph(rng, 10, 0.3, 3, 0));
    for (unsigned h = 0; h <= 3; ++h) {
      const auto prepared =
          prepare_features(dataset_of(graphs), {WeightKind::native, 1}, FiltrationLength::fixed(1), h);
      REQUIRE(prepared.filtration.size() == 1);
      const GroundLine line(prepared.filtration);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto ci = wl_string_counts(graphs[i], h);
        for (std::size_t j = 0; j < graphs.size(); ++j) {
          const auto cj = wl_string_counts(graphs[j], h);
          double dot = 0.0, sq = 0.0;
          for (const auto& [key, x] : ci) {
            auto it = cj.find(key);
            const double y = it == cj.end() ? 0.0 : static_cast<double>(it->second);
            dot += static_cast<double>(x) * y;
            sq += (static_cast<double>(x) - y) * (static_cast<double>(x) - y);
          }
          for (const auto& [key, y] : cj)
            if (!ci.count(key)) sq += static_cast<double>(y) * static_cast<double>(y);
          const auto& a = prepared.tables[i];
          const auto& b = prepared.tables[j];
          CHECK(histogram_kernel_pair(a, b) == dot);
          CHECK(filtration_kernel_pair(a, b, line, 1.3) == doctest::Approx(dot).epsilon(1e-9));
          CHECK(product_kernel_pair(a, b, line, 1.3, 0.01) ==
                doctest::Approx(std::exp(-0.01 * sq)).epsilon(1e-9));
        }
      }
    }
  }

  TEST_CASE("features missing from one side only affect the product variant") {
    const GroundLine line(std::vector<double>{2.0, 0.0});
    const FeatureTable a(2, {0, 5}, {1, 1, 2, 0}), b(2, {0}, {0, 2});
    const FeatureTable a_only_shared(2, {0}, {1, 1});
    CHECK(filtration_kernel_pair(a, b, line, 1.0) == filtration_kernel_pair(a_only_shared, b, line, 1.0));
    // Shared feature: W = |0.5 - 0| * 2 = 1; masses 2 vs 2. Feature 5: mass 2 vs 0.
    CHECK(filtration_kernel_pair(a, b, line, 1.0) == doctest::Approx(4.0 * std::exp(-1.0)));
    CHECK(product_kernel_pair(a, b, line, 1.0, 0.5) ==
          doctest::Approx(std::exp(-1.0) * std::exp(-0.5 * 4.0)).epsilon(1e-14));
  }

  TEST_CASE("Gram matrix pipeline") {
    SUBCASE("single graph") {
      KernelConfig c;
      c.h = 1;
      const auto ds = dataset_of({triangle()});
      const auto m = gram_matrix(ds, {WeightKind::degree, 1}, FiltrationLength::fixed(2), c);
      CHECK(m.n == 1);
      CHECK(m(0, 0) == 18.0);
      c.normalize = true;
      CHECK(gram_matrix(ds, {WeightKind::degree, 1}, FiltrationLength::fixed(2), c)(0, 0) == 1.0);
    }
    SUBCASE("graph and a permutation of it are indistinguishable") {
      std::mt19937_64 rng(73);
      const auto g = random_graph(rng, 12, 0.35, 3, 5);
      const auto p = permute_graph(g, shuffled_identity(rng, g.vertex_count()));
      for (auto variant : {KernelVariant::linear_combination, KernelVariant::product}) {
        KernelConfig c;
        c.h = 2;
        c.variant = variant;
        c.beta = 0.01;
        const auto m = gram_matrix(dataset_of({g, p}), {WeightKind::native, 1},
                                   FiltrationLength::fixed(3), c);
        CHECK(m(0, 1) == m(0, 0));
        CHECK(m(1, 1) == m(0, 0));
      }
    }
    SUBCASE("errors") {
      KernelConfig c;
      CHECK_THROWS_AS(gram_matrix(dataset_of({}), {}, FiltrationLength::fixed(1), c), ArgumentError);
      const auto empty = LabeledGraph::from_edges(0, {}, {});
      CHECK_THROWS_AS(gram_matrix(dataset_of({empty}), {}, FiltrationLength::fixed(1), c),
                      ArgumentError);
      CHECK_THROWS_AS(gram_matrix(dataset_of({triangle()}), {}, FiltrationLength::fixed(0), c),
                      ArgumentError);
    }
    SUBCASE("edgeless dataset uses a single level") {
      KernelConfig c;
      c.h = 1;
      const auto iso = LabeledGraph::from_edges(3, {}, {});
      const auto m = gram_matrix(dataset_of({iso, iso}), {}, FiltrationLength::fixed(4), c);
      CHECK(m(0, 1) == 18.0);
    }
  }

  TEST_CASE("triangle filtration separates the prism from K33, plain WL does not") {
    const auto ds = dataset_of({prism(), k33()});
    KernelConfig c;
    c.h = 1;
    const auto m2 = gram_matrix(ds, {WeightKind::triangles, 1}, FiltrationLength::fixed(2), c);
    // Hand count: depth-0 feature has mass 12 on both sides (144), the
    // degree-3 feature mass 6 (36); each graph has one private feature of mass 6.
    CHECK(m2(0, 1) == 180.0);
    CHECK(m2(0, 0) == 216.0);
    CHECK(distance(m2, 0, 1) == 72.0);
    for (unsigned h = 0; h <= 5; ++h) {
      c.h = h;
      const auto m1 = gram_matrix(ds, {WeightKind::triangles, 1}, FiltrationLength::fixed(1), c);
      CHECK(distance(m1, 0, 1) == 0.0);
    }
  }

  TEST_CASE("normalization and symmetry") {
    GramMatrix m;
    m.n = 2;
    m.values = {4.0, 2.0, 2.0, 9.0};
    CHECK(m.is_symmetric());
    normalize_cosine(m);
    CHECK(m(0, 1) == doctest::Approx(2.0 / 6.0));
    CHECK(m(0, 0) == 1.0);
    GramMatrix z;
    z.n = 1;
    z.values = {0.0};
    CHECK_THROWS_AS(normalize_cosine(z), ArgumentError);
    GramMatrix asym;
    asym.n = 2;
    asym.values = {1.0, 2.0, 2.1, 1.0};
    CHECK_FALSE(asym.is_symmetric());
  }

  TEST_CASE("threaded fill equals sequential fill bit for bit") {
    std::mt19937_64 rng(79);
    std::vector<LabeledGraph> graphs;
    for (int i = 0; i < 40; ++i) graphs.push_back(random_graph(rng, 14, 0.3, 3, 6));
    KernelConfig c;
    c.h = 2;
    const auto ds = dataset_of(graphs);
    const auto seq = gram_matrix(ds, {}, FiltrationLength::fixed(4), c, 1);
    const auto par = gram_matrix(ds, {}, FiltrationLength::fixed(4), c, 4);
    CHECK(seq.values == par.values);
    CHECK(seq.is_symmetric(0.0));
    CHECK(smallest_eigenvalue(seq) >= -1e-8 * seq.trace());
  }
}
