#include "fwl/transport.hpp"

#include <cmath>
#include <string>

#include "fwl/errors.hpp"

namespace fwl {

GroundLine::GroundLine(std::vector<double> positions) : positions_(std::move(positions)) {
  if (positions_.empty()) throw ArgumentError("ground line needs at least one position");
  bool decreasing = true, increasing = true;
  for (std::size_t i = 1; i < positions_.size(); ++i) {
    decreasing = decreasing && positions_[i - 1] >= positions_[i];
    increasing = increasing && positions_[i - 1] <= positions_[i];
    gaps_.push_back(std::abs(positions_[i - 1] - positions_[i]));
  }
  if (!decreasing && !increasing) throw ArgumentError("ground line positions must be monotone");
}

namespace {

void check_histogram(std::span<const double> h, const GroundLine& line, const char* which) {
  if (h.size() != line.size())
    throw ArgumentError(std::string(which) + " has " + std::to_string(h.size()) +
                        " bins, ground line has " + std::to_string(line.size()));
  double mass = 0.0;
  for (double x : h) {
    if (!(x >= 0.0)) throw ArgumentError(std::string(which) + " has a negative or NaN entry");
    mass += x;
  }
  if (std::abs(mass - 1.0) > kMassTolerance)
    throw ArgumentError(std::string(which) + " has mass " + std::to_string(mass) + ", expected 1");
}

}  // namespace

double wasserstein_from_cumulative(std::span<const double> c1, std::span<const double> c2,
                                   std::span<const double> gaps) {
  double w = 0.0;
  for (std::size_t i = 0; i < gaps.size(); ++i) w += std::abs(c1[i] - c2[i]) * gaps[i];
  return w;
}

double wasserstein_1d(std::span<const double> h1, std::span<const double> h2,
                      const GroundLine& line) {
  check_histogram(h1, line, "first histogram");
  check_histogram(h2, line, "second histogram");
  double c1 = 0.0, c2 = 0.0, w = 0.0;
  const auto gaps = line.gaps();
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    c1 += h1[i];
    c2 += h2[i];
    w += std::abs(c1 - c2) * gaps[i];
  }
  return w;
}

double base_kernel(std::span<const double> h1, std::span<const double> h2,
                   const GroundLine& line, double gamma) {
  if (!(gamma >= 0.0)) throw ArgumentError("gamma must be nonnegative");
  return std::exp(-gamma * wasserstein_1d(h1, h2, line));
}

}  // namespace fwl
