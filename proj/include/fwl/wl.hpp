#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fwl/filtration.hpp"
#include "fwl/graph.hpp"

namespace fwl {

/// Interned WL label; doubles as the feature id.
using LabelId = std::uint32_t;

/// Injective map from WL keys to dense label ids, shared by all graphs and
/// filtration levels of one dataset run. Not thread-safe. Initial labels take the ids
/// 0..|alphabet|-1 when registered up front; refined labels follow.
class LabelInterner {
 public:
  LabelInterner() = default;
  /// Registers the initial alphabet in ascending label order.
  explicit LabelInterner(std::span<const VertexLabel> alphabet);

  LabelId initial(VertexLabel label);
  /// Id for (previous label, sorted neighbor labels); `key` holds the
  /// previous label followed by the sorted neighbor labels.
  LabelId refined(std::span<const LabelId> key, unsigned depth);

  /// WL iteration that produced `id` (0 for initial labels).
  unsigned depth_of(LabelId id) const { return depth_[id]; }
  std::size_t size() const { return depth_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<LabelId>& key) const noexcept;
  };
  std::unordered_map<VertexLabel, LabelId> initial_;
  std::unordered_map<std::vector<LabelId>, LabelId, KeyHash> refined_;
  std::vector<unsigned> depth_;
  std::vector<LabelId> scratch_;
};

/// Initial label ids of every vertex.
std::vector<LabelId> initial_labels(const LabeledGraph& g, LabelInterner& interner);

/// One WL iteration: the new label of v interns (labels[v], sorted labels of
/// N(v)). `depth` is the iteration being produced.
std::vector<LabelId> wl_refine(const LabeledGraph& g, std::span<const LabelId> labels,
                               LabelInterner& interner, unsigned depth = 1);

/// Occurrence counts of one feature across the k filtration levels.
class FiltrationHistogram {
 public:
  explicit FiltrationHistogram(std::vector<std::uint64_t> counts);

  std::span<const std::uint64_t> counts() const { return counts_; }
  std::uint64_t mass() const { return mass_; }
  /// counts / mass; throws ArgumentError when mass is 0.
  std::vector<double> normalized() const;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t mass_ = 0;
};

/// Filtration histograms of all features observed in one graph, stored flat
/// and sorted by feature id. Features that never occur are absent.
class FeatureTable {
 public:
  FeatureTable() = default;
  FeatureTable(std::size_t levels, std::vector<LabelId> ids, std::vector<std::uint64_t> counts);

  std::size_t levels() const { return levels_; }
  std::size_t feature_count() const { return ids_.size(); }
  std::span<const LabelId> ids() const { return ids_; }

  /// Position of `id` in ids(), if present.
  std::optional<std::size_t> find(LabelId id) const;

  std::span<const std::uint64_t> counts(std::size_t pos) const {
    return {counts_.data() + pos * levels_, levels_};
  }
  std::uint64_t mass(std::size_t pos) const { return masses_[pos]; }
  /// Cumulative sums of the normalized histogram, first levels-1 entries.
  std::span<const double> cumulative(std::size_t pos) const {
    return {cdf_.data() + pos * (levels_ - 1), levels_ - 1};
  }
  FiltrationHistogram histogram(std::size_t pos) const;

  /// Sum of squared masses, exact.
  std::uint64_t squared_mass_sum() const { return squared_mass_sum_; }
  std::uint64_t total_mass() const { return total_mass_; }

  /// One line per feature: `feature_id depth counts...`.
  void dump(std::ostream& out, const LabelInterner& interner) const;

  friend bool operator==(const FeatureTable& a, const FeatureTable& b) {
    return a.levels_ == b.levels_ && a.ids_ == b.ids_ && a.counts_ == b.counts_;
  }

 private:
  std::size_t levels_ = 0;
  std::vector<LabelId> ids_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> masses_;
  std::vector<double> cdf_;
  std::uint64_t squared_mass_sum_ = 0;
  std::uint64_t total_mass_ = 0;
};

/// Runs `h` WL iterations on every filtration level of `g` and counts each
/// label (depths 0..h) per level.
FeatureTable extract_features(const LabeledGraph& g, const Filtration& filtration, unsigned h,
                              LabelInterner& interner);

}  // namespace fwl
