#include "fwl/kernels.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "fwl/errors.hpp"
#include "fwl/parallel.hpp"

namespace fwl {

std::string to_string(KernelVariant v) {
  return v == KernelVariant::product ? "product" : "linear";
}

KernelVariant parse_variant(const std::string& name) {
  if (name == "linear") return KernelVariant::linear_combination;
  if (name == "product") return KernelVariant::product;
  throw ArgumentError("unknown kernel variant '" + name + "' (expected linear or product)");
}

void KernelConfig::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ArgumentError("gamma must be > 0");
  if (variant == KernelVariant::product && (!(beta > 0.0) || !std::isfinite(beta)))
    throw ArgumentError("beta must be > 0 for the product variant");
}

bool GramMatrix::is_symmetric(double rel_tol) const {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = (*this)(i, j), b = (*this)(j, i);
      if (std::abs(a - b) > rel_tol * std::max({std::abs(a), std::abs(b), 1e-300})) return false;
    }
  return true;
}

double GramMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

double smallest_eigenvalue(const GramMatrix& m) {
  if (m.n == 0) return 0.0;
  Eigen::MatrixXd a(m.n, m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) a(i, j) = 0.5 * (m(i, j) + m(j, i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void normalize_cosine(GramMatrix& m) {
  std::vector<double> scale(m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    if (!(m(i, i) > 0.0))
      throw ArgumentError("cannot normalize: self-kernel of graph " +
                          std::to_string(m.graph_ids.empty() ? i : m.graph_ids[i]) + " is " +
                          std::to_string(m(i, i)));
    scale[i] = std::sqrt(m(i, i));
  }
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) m(i, j) = i == j ? 1.0 : m(i, j) / (scale[i] * scale[j]);
}

namespace {

void check_line(const FeatureTable& a, const FeatureTable& b, const GroundLine& line) {
  if (a.levels() != line.size() || b.levels() != line.size())
    throw ArgumentError("feature tables have " + std::to_string(a.levels()) + " and " +
                        std::to_string(b.levels()) + " levels, ground line has " +
                        std::to_string(line.size()));
}

/// Calls fn(pos_a, pos_b) for each shared feature in ascending id order,
/// walking the smaller table and searching the larger one.
template <class Fn>
void for_each_shared(const FeatureTable& a, const FeatureTable& b, Fn&& fn) {
  const bool a_small = a.feature_count() <= b.feature_count();
  const FeatureTable& small = a_small ? a : b;
  const FeatureTable& large = a_small ? b : a;
  const auto ids = large.ids();
  auto cursor = ids.begin();
  for (std::size_t p = 0; p < small.feature_count() && cursor != ids.end(); ++p) {
    cursor = std::lower_bound(cursor, ids.end(), small.ids()[p]);
    if (cursor == ids.end() || *cursor != small.ids()[p]) continue;
    const auto q = static_cast<std::size_t>(cursor - ids.begin());
    if (a_small)
      fn(p, q);
    else
      fn(q, p);
  }
}

}  // namespace

double filtration_kernel_pair(const FeatureTable& a, const FeatureTable& b,
                              const GroundLine& line, double gamma) {
  check_line(a, b, line);
  const auto gaps = line.gaps();
  double sum = 0.0;
  for_each_shared(a, b, [&](std::size_t pa, std::size_t pb) {
    const double w = wasserstein_from_cumulative(a.cumulative(pa), b.cumulative(pb), gaps);
    sum += std::exp(-gamma * w) * static_cast<double>(a.mass(pa)) * static_cast<double>(b.mass(pb));
  });
  return sum;
}

double product_kernel_pair(const FeatureTable& a, const FeatureTable& b, const GroundLine& line,
                           double gamma, double beta) {
  check_line(a, b, line);
  const auto gaps = line.gaps();
  // sum_f (m_a - m_b)^2 over the union = S_a + S_b - 2 sum_shared m_a m_b,
  // exact in integers.
  double transport = 0.0;
  std::uint64_t cross = 0;
  for_each_shared(a, b, [&](std::size_t pa, std::size_t pb) {
    transport += wasserstein_from_cumulative(a.cumulative(pa), b.cumulative(pb), gaps);
    cross += a.mass(pa) * b.mass(pb);
  });
  const std::uint64_t squared_diff = a.squared_mass_sum() + b.squared_mass_sum() - 2 * cross;
  return std::exp(-gamma * transport - beta * static_cast<double>(squared_diff));
}

double histogram_kernel_pair(const FeatureTable& a, const FeatureTable& b) {
  if (a.levels() != 1 || b.levels() != 1)
    throw ArgumentError("histogram kernel needs single-level tables, got " +
                        std::to_string(a.levels()) + " and " + std::to_string(b.levels()));
  std::uint64_t sum = 0;
  for_each_shared(a, b, [&](std::size_t pa, std::size_t pb) { sum += a.mass(pa) * b.mass(pb); });
  return static_cast<double>(sum);
}

GramMatrix gram_from_tables(std::span<const FeatureTable> tables, const GroundLine& line,
                            const KernelConfig& config, unsigned threads) {
  config.validate();
  GramMatrix m;
  m.n = tables.size();
  m.values.assign(m.n * m.n, 0.0);
  m.graph_ids.resize(m.n);
  for (std::size_t i = 0; i < m.n; ++i) m.graph_ids[i] = i;

  auto pair = [&](std::size_t i, std::size_t j) {
    return config.variant == KernelVariant::product
               ? product_kernel_pair(tables[i], tables[j], line, config.gamma, config.beta)
               : filtration_kernel_pair(tables[i], tables[j], line, config.gamma);
  };
  // Row i owns cells (i, j >= i) and their mirrors, so writes never overlap.
  parallel_for(m.n, threads, [&](std::size_t i) {
    for (std::size_t j = i; j < m.n; ++j) {
      const double v = pair(i, j);
      m(i, j) = v;
      m(j, i) = v;
    }
  });
  if (config.normalize) normalize_cosine(m);
  return m;
}

}  // namespace fwl
