#pragma once

#include <span>
#include <vector>

#include "fwl/filtration.hpp"

namespace fwl {

/// Filtration thresholds seen as points on the real line, with the distance
/// |a_i - a_{i+1}| between consecutive points.
class GroundLine {
 public:
  GroundLine() = default;
  /// Throws ArgumentError if `positions` is empty or not monotone.
  explicit GroundLine(std::vector<double> positions);
  explicit GroundLine(const Filtration& filtration) : GroundLine(filtration.thresholds) {}

  std::size_t size() const { return positions_.size(); }
  std::span<const double> positions() const { return positions_; }
  std::span<const double> gaps() const { return gaps_; }

  friend bool operator==(const GroundLine&, const GroundLine&) = default;

 private:
  std::vector<double> positions_;
  std::vector<double> gaps_;
};

/// Mass tolerance accepted for normalized histograms.
inline constexpr double kMassTolerance = 1e-9;

/// 1-Wasserstein distance between two unit-mass histograms on `line` under
/// the ground distance |a_i - a_j|. Linear in k: the gap-weighted L1
/// distance between the two cumulative sums. Throws ArgumentError on length
/// or mass mismatch.
double wasserstein_1d(std::span<const double> h1, std::span<const double> h2,
                      const GroundLine& line);

/// Same distance from precomputed cumulative sums (k-1 entries each).
double wasserstein_from_cumulative(std::span<const double> c1, std::span<const double> c2,
                                   std::span<const double> gaps);

/// exp(-gamma * W(h1, h2)).
double base_kernel(std::span<const double> h1, std::span<const double> h2,
                   const GroundLine& line, double gamma);

}  // namespace fwl
