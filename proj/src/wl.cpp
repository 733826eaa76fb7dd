#include "fwl/wl.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "fwl/errors.hpp"

namespace fwl {

LabelInterner::LabelInterner(std::span<const VertexLabel> alphabet) {
  std::vector<VertexLabel> sorted(alphabet.begin(), alphabet.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexLabel l : sorted) initial(l);
}

LabelId LabelInterner::initial(VertexLabel label) {
  auto [it, inserted] = initial_.try_emplace(label, static_cast<LabelId>(depth_.size()));
  if (inserted) depth_.push_back(0);
  return it->second;
}

LabelId LabelInterner::refined(std::span<const LabelId> key, unsigned depth) {
  scratch_.assign(key.begin(), key.end());
  auto it = refined_.find(scratch_);
  if (it != refined_.end()) return it->second;
  const auto id = static_cast<LabelId>(depth_.size());
  refined_.emplace(scratch_, id);
  depth_.push_back(depth);
  return id;
}

std::size_t LabelInterner::KeyHash::operator()(const std::vector<LabelId>& key) const noexcept {
  // FNV-1a over the 32-bit words.
  std::uint64_t h = 1469598103934665603ULL;
  for (LabelId x : key) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::vector<LabelId> initial_labels(const LabeledGraph& g, LabelInterner& interner) {
  std::vector<LabelId> labels;
  labels.reserve(g.vertex_count());
  for (VertexLabel l : g.vertex_labels()) labels.push_back(interner.initial(l));
  return labels;
}

std::vector<LabelId> wl_refine(const LabeledGraph& g, std::span<const LabelId> labels,
                               LabelInterner& interner, unsigned depth) {
  if (labels.size() != g.vertex_count())
    throw ArgumentError("label vector length " + std::to_string(labels.size()) +
                        " does not match vertex count " + std::to_string(g.vertex_count()));
  std::vector<LabelId> next(labels.size());
  std::vector<LabelId> key;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    key.clear();
    key.push_back(labels[v]);
    for (Vertex u : g.neighbors(v)) key.push_back(labels[u]);
    std::sort(key.begin() + 1, key.end());
    next[v] = interner.refined(key, depth);
  }
  return next;
}

FiltrationHistogram::FiltrationHistogram(std::vector<std::uint64_t> counts)
    : counts_(std::move(counts)) {
  for (auto c : counts_) mass_ += c;
}

std::vector<double> FiltrationHistogram::normalized() const {
  if (mass_ == 0) throw ArgumentError("cannot normalize a zero-mass histogram");
  std::vector<double> out;
  out.reserve(counts_.size());
  for (auto c : counts_) out.push_back(static_cast<double>(c) / static_cast<double>(mass_));
  return out;
}

FeatureTable::FeatureTable(std::size_t levels, std::vector<LabelId> ids,
                           std::vector<std::uint64_t> counts)
    : levels_(levels), ids_(std::move(ids)), counts_(std::move(counts)) {
  if (levels_ == 0) throw ArgumentError("feature table needs at least one level");
  if (counts_.size() != ids_.size() * levels_)
    throw ArgumentError("feature table counts do not match ids x levels");
  if (!std::is_sorted(ids_.begin(), ids_.end()) ||
      std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw ArgumentError("feature ids must be strictly increasing");
  masses_.resize(ids_.size());
  cdf_.resize(ids_.size() * (levels_ - 1));
  for (std::size_t p = 0; p < ids_.size(); ++p) {
    std::uint64_t m = 0;
    for (auto c : this->counts(p)) m += c;
    if (m == 0) throw ArgumentError("feature " + std::to_string(ids_[p]) + " has zero mass");
    masses_[p] = m;
    total_mass_ += m;
    squared_mass_sum_ += m * m;
    double acc = 0.0;
    const auto row = this->counts(p);
    for (std::size_t i = 0; i + 1 < levels_; ++i) {
      acc += static_cast<double>(row[i]) / static_cast<double>(m);
      cdf_[p * (levels_ - 1) + i] = acc;
    }
  }
}

std::optional<std::size_t> FeatureTable::find(LabelId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

FiltrationHistogram FeatureTable::histogram(std::size_t pos) const {
  auto c = counts(pos);
  return FiltrationHistogram({c.begin(), c.end()});
}

void FeatureTable::dump(std::ostream& out, const LabelInterner& interner) const {
  for (std::size_t p = 0; p < ids_.size(); ++p) {
    out << ids_[p] << ' ' << interner.depth_of(ids_[p]);
    for (auto c : counts(p)) out << ' ' << c;
    out << '\n';
  }
}

FeatureTable extract_features(const LabeledGraph& g, const Filtration& filtration, unsigned h,
                              LabelInterner& interner) {
  filtration.validate();
  const std::size_t k = filtration.size();
  // (feature, level) occurrences, aggregated after sorting.
  std::vector<std::pair<LabelId, std::uint32_t>> seen;
  seen.reserve((h + 1) * k * g.vertex_count());
  for (std::size_t level = 0; level < k; ++level) {
    const LabeledGraph gi = filtration_graph(g, filtration.thresholds[level]);
    std::vector<LabelId> labels = initial_labels(gi, interner);
    for (unsigned depth = 0;; ++depth) {
      for (LabelId l : labels) seen.emplace_back(l, static_cast<std::uint32_t>(level));
      if (depth == h) break;
      labels = wl_refine(gi, labels, interner, depth + 1);
    }
  }
  std::sort(seen.begin(), seen.end());
  std::vector<LabelId> ids;
  std::vector<std::uint64_t> counts;
  for (const auto& [id, level] : seen) {
    if (ids.empty() || ids.back() != id) {
      ids.push_back(id);
      counts.resize(counts.size() + k, 0);
    }
    ++counts[(ids.size() - 1) * k + level];
  }
  return FeatureTable(k, std::move(ids), std::move(counts));
}

}  // namespace fwl
