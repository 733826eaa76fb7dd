#include "fwl/run.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fwl/csl.hpp"
#include "fwl/errors.hpp"
#include "fwl/tud.hpp"
#include "json.hpp"

namespace fwl {

using nlohmann::json;

FiltrationLength parse_filtration_length(const std::string& text) {
  if (text == "auto") return FiltrationLength::all_distinct();
  std::size_t used = 0;
  long long k = 0;
  try {
    k = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty())
    throw ArgumentError("--k expects a positive integer or 'auto', got '" + text + "'");
  if (k < 1) throw ArgumentError("--k must be >= 1, got " + text);
  return FiltrationLength::fixed(static_cast<std::size_t>(k));
}

std::string to_string(FiltrationLength length) {
  return length.automatic ? "auto" : std::to_string(length.k);
}

GraphDataset load_dataset(const RunOptions& options, std::ostream* warnings) {
  GraphDataset ds;
  if (options.dataset == kCslDatasetName) {
    ds = generate_csl_benchmark(options.copies, options.seed);
  } else {
    const std::filesystem::path dir(options.dataset);
    std::string name = options.name;
    if (name.empty()) name = dir.filename().empty() ? dir.parent_path().filename().string()
                                                    : dir.filename().string();
    ds = load_tud_dataset(dir, name, warnings);
  }
  if (options.limit && *options.limit < ds.size()) {
    ds.graphs.resize(*options.limit);
    ds.class_labels.resize(*options.limit);
  }
  return ds;
}

RunManifest run_compute(const RunOptions& options, std::ostream& log) {
  if (options.out.empty()) throw ArgumentError("--out is required");
  options.kernel.validate();
  const auto start = std::chrono::steady_clock::now();

  const GraphDataset dataset = load_dataset(options, &log);
  const PreparedDataset prepared =
      prepare_features(dataset, options.weights, options.length, options.kernel.h, options.threads);

  log << "dataset " << dataset.name << ": " << dataset.size() << " graphs\n";
  log << "thresholds (k=" << prepared.filtration.size() << "):";
  for (double a : prepared.filtration.thresholds) log << ' ' << format_value(a);
  log << '\n';
  if (!options.length.automatic && prepared.filtration.size() < options.length.k)
    log << "note: only " << prepared.filtration.size()
        << " distinct edge weights, filtration length reduced from " << options.length.k << '\n';

  GramMatrix gram = gram_from_tables(prepared.tables, GroundLine(prepared.filtration),
                                     options.kernel, options.threads);
  gram.class_labels = dataset.class_labels;
  write_gram(gram, options.format, options.out);

  RunManifest manifest;
  manifest.options = options;
  manifest.graph_count = dataset.size();
  manifest.thresholds = prepared.filtration.thresholds;
  manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_manifest(manifest, manifest_path_for(options.out));
  log << "wrote " << options.out.string() << " (" << gram.n << "x" << gram.n << ") in "
      << manifest.wall_seconds << " s\n";
  return manifest;
}

std::filesystem::path manifest_path_for(const std::filesystem::path& gram_path) {
  return std::filesystem::path(gram_path.string() + ".manifest.json");
}

std::string manifest_to_json(const RunManifest& m) {
  const RunOptions& o = m.options;
  json j;
  j["dataset"] = o.dataset;
  j["name"] = o.name;
  j["weights"] = to_string(o.weights.kind);
  j["lambda"] = o.weights.lambda;
  j["k"] = to_string(o.length);
  j["k_effective"] = m.thresholds.size();
  j["h"] = o.kernel.h;
  j["gamma"] = o.kernel.gamma;
  j["beta"] = o.kernel.beta;
  j["variant"] = to_string(o.kernel.variant);
  j["normalize"] = o.kernel.normalize;
  j["format"] = to_string(o.format);
  j["out"] = o.out.string();
  j["threads"] = o.threads;
  j["seed"] = o.seed;
  j["copies"] = o.copies;
  j["limit"] = o.limit ? json(*o.limit) : json(nullptr);
  j["graph_count"] = m.graph_count;
  j["thresholds"] = m.thresholds;
  j["wall_seconds"] = m.wall_seconds;
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    RunManifest m;
    RunOptions& o = m.options;
    o.dataset = j.at("dataset").get<std::string>();
    o.name = j.at("name").get<std::string>();
    o.weights.kind = parse_weight_kind(j.at("weights").get<std::string>());
    o.weights.lambda = j.at("lambda").get<unsigned>();
    o.length = parse_filtration_length(j.at("k").get<std::string>());
    o.kernel.h = j.at("h").get<unsigned>();
    o.kernel.gamma = j.at("gamma").get<double>();
    o.kernel.beta = j.at("beta").get<double>();
    o.kernel.variant = parse_variant(j.at("variant").get<std::string>());
    o.kernel.normalize = j.at("normalize").get<bool>();
    o.format = parse_gram_format(j.at("format").get<std::string>());
    o.out = j.at("out").get<std::string>();
    o.threads = j.at("threads").get<unsigned>();
    o.seed = j.at("seed").get<std::uint64_t>();
    o.copies = j.at("copies").get<unsigned>();
    if (!j.at("limit").is_null()) o.limit = j.at("limit").get<std::size_t>();
    m.graph_count = j.at("graph_count").get<std::size_t>();
    m.thresholds = j.at("thresholds").get<std::vector<double>>();
    m.wall_seconds = j.at("wall_seconds").get<double>();
    return m;
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid run manifest: ") + e.what());
  }
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << manifest_to_json(manifest);
  if (!out.flush()) throw IoError("write to " + path.string() + " failed");
}

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return manifest_from_json(ss.str());
}

}  // namespace fwl
