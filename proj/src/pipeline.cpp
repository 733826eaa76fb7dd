#include <string>

#include "fwl/errors.hpp"
#include "fwl/kernels.hpp"
#include "fwl/parallel.hpp"

namespace fwl {

PreparedDataset prepare_features(const GraphDataset& dataset, const WeightFunctionSpec& spec,
                                 FiltrationLength length, unsigned h, unsigned threads) {
  dataset.validate();
  spec.validate();
  if (dataset.graphs.empty()) throw ArgumentError("dataset '" + dataset.name + "' is empty");
  if (!length.automatic && length.k < 1) throw ArgumentError("filtration length k must be >= 1");
  for (std::size_t i = 0; i < dataset.size(); ++i)
    if (dataset.graphs[i].vertex_count() == 0)
      throw ArgumentError("graph " + std::to_string(i) + " of dataset '" + dataset.name +
                          "' has no vertices");

  PreparedDataset out;
  out.weighted.name = dataset.name;
  out.weighted.class_labels = dataset.class_labels;
  out.weighted.graphs.resize(dataset.size());
  parallel_for(dataset.size(), threads, [&](std::size_t i) {
    out.weighted.graphs[i] = apply_weights(dataset.graphs[i], spec);
  });

  const std::vector<double> pooled = pooled_weights(out.weighted);
  if (pooled.empty()) {
    // No edges anywhere: the single level is the graph itself.
    out.filtration.thresholds = {0.0};
    out.filtration.requested_length = length.automatic ? 1 : length.k;
  } else {
    out.filtration = length.automatic ? fit_thresholds_auto(pooled) : fit_thresholds(pooled, length.k);
  }

  std::vector<VertexLabel> alphabet;
  for (const auto& g : dataset.graphs)
    alphabet.insert(alphabet.end(), g.vertex_labels().begin(), g.vertex_labels().end());
  out.interner = LabelInterner(alphabet);

  out.tables.reserve(dataset.size());
  for (const auto& g : out.weighted.graphs)
    out.tables.push_back(extract_features(g, out.filtration, h, out.interner));
  return out;
}

GramMatrix gram_matrix(const GraphDataset& dataset, const WeightFunctionSpec& spec,
                       FiltrationLength length, const KernelConfig& config, unsigned threads) {
  config.validate();
  const PreparedDataset prepared = prepare_features(dataset, spec, length, config.h, threads);
  GramMatrix m = gram_from_tables(prepared.tables, GroundLine(prepared.filtration), config, threads);
  m.class_labels = dataset.class_labels;
  return m;
}

}  // namespace fwl
