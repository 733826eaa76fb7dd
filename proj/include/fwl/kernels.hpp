#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fwl/filtration.hpp"
#include "fwl/graph.hpp"
#include "fwl/transport.hpp"
#include "fwl/weights.hpp"
#include "fwl/wl.hpp"

namespace fwl {

enum class KernelVariant { linear_combination, product };

std::string to_string(KernelVariant v);
/// Accepts "linear" and "product".
KernelVariant parse_variant(const std::string& name);

struct KernelConfig {
  unsigned h = 3;
  double gamma = 1.0;
  double beta = 1.0;
  KernelVariant variant = KernelVariant::linear_combination;
  bool normalize = false;

  /// gamma > 0, and beta > 0 for the product variant.
  void validate() const;
};

/// Filtration length: a fixed k (fit by 1-D k-means) or one level per
/// distinct weight.
struct FiltrationLength {
  bool automatic = false;
  std::size_t k = 1;

  static FiltrationLength fixed(std::size_t k) { return {false, k}; }
  static FiltrationLength all_distinct() { return {true, 0}; }
};

/// Dense symmetric matrix of pairwise kernel values, row-major.
struct GramMatrix {
  std::size_t n = 0;
  std::vector<double> values;
  /// Dataset index of every row.
  std::vector<std::size_t> graph_ids;
  std::vector<std::int64_t> class_labels;

  double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values[i * n + j]; }

  bool is_symmetric(double rel_tol = 1e-9) const;
  double trace() const;
};

/// Smallest eigenvalue of the (symmetrized) matrix.
double smallest_eigenvalue(const GramMatrix& m);

/// K(i,j) / sqrt(K(i,i) K(j,j)). Throws ArgumentError on a nonpositive
/// diagonal entry.
void normalize_cosine(GramMatrix& m);

/// Sum over features present in both tables of
/// exp(-gamma W(f)) * mass_a(f) * mass_b(f).
double filtration_kernel_pair(const FeatureTable& a, const FeatureTable& b,
                              const GroundLine& line, double gamma);

/// Product over features present in either table of
/// exp(-gamma W(f)) * exp(-beta (mass_a(f) - mass_b(f))^2), evaluated in
/// log space. A feature missing from one side contributes only its mass term.
double product_kernel_pair(const FeatureTable& a, const FeatureTable& b, const GroundLine& line,
                           double gamma, double beta);

/// WL subtree (histogram) kernel: sum of mass products over shared features.
/// Both tables must have a single level.
double histogram_kernel_pair(const FeatureTable& a, const FeatureTable& b);

/// Gram matrix over precomputed tables. Rows are filled concurrently.
GramMatrix gram_from_tables(std::span<const FeatureTable> tables, const GroundLine& line,
                            const KernelConfig& config, unsigned threads = 1);

/// Intermediate products of the feature pipeline.
struct PreparedDataset {
  GraphDataset weighted;
  Filtration filtration;
  LabelInterner interner;
  std::vector<FeatureTable> tables;
};

/// Weights every graph, fits one filtration on the pooled weights and
/// extracts the feature tables with a shared interner. Weighting runs on up
/// to `threads` workers; extraction is sequential so label ids are
/// reproducible.
PreparedDataset prepare_features(const GraphDataset& dataset, const WeightFunctionSpec& spec,
                                 FiltrationLength length, unsigned h, unsigned threads = 1);

GramMatrix gram_matrix(const GraphDataset& dataset, const WeightFunctionSpec& spec,
                       FiltrationLength length, const KernelConfig& config, unsigned threads = 1);

}  // namespace fwl
