#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fwl/gram_io.hpp"
#include "fwl/kernels.hpp"
#include "fwl/weights.hpp"

namespace fwl {

/// Dataset source value that selects the generated CSL benchmark.
inline constexpr const char* kCslDatasetName = "csl";

/// Everything needed to reproduce one Gram file.
struct RunOptions {
  /// TUDataset directory, or "csl" for the built-in CSL benchmark.
  std::string dataset;
  /// File prefix inside the directory; empty means the directory name.
  std::string name;
  WeightFunctionSpec weights;
  FiltrationLength length = FiltrationLength::fixed(1);
  KernelConfig kernel;
  GramFormat format = GramFormat::csv;
  std::filesystem::path out;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  /// Permuted copies per CSL class.
  unsigned copies = 10;
  /// Use only the first `limit` graphs of the dataset.
  std::optional<std::size_t> limit;
};

struct RunManifest {
  RunOptions options;
  std::size_t graph_count = 0;
  std::vector<double> thresholds;
  double wall_seconds = 0.0;
};

/// "auto" or a positive integer; throws ArgumentError otherwise.
FiltrationLength parse_filtration_length(const std::string& text);
std::string to_string(FiltrationLength length);

/// Loads (or generates) the dataset named by `options`, applying `limit`.
GraphDataset load_dataset(const RunOptions& options, std::ostream* warnings = nullptr);

/// Weights, thresholds, features, Gram matrix, then writes the Gram file and
/// its manifest. Progress and the threshold sequence go to `log`.
RunManifest run_compute(const RunOptions& options, std::ostream& log);

/// `<gram path>.manifest.json`.
std::filesystem::path manifest_path_for(const std::filesystem::path& gram_path);

std::string manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& text);
void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);
RunManifest read_manifest(const std::filesystem::path& path);

}  // namespace fwl
