// Command-line frontend for the WL filtration kernels.
//
//   fwl compute --dataset <dir|csl> [--name DS] --weights degree --k 3 --h 2 --out K.csv
//   fwl csl --out <dir> [--copies 10] [--seed 0]
//   fwl inspect --dataset <dir|csl> --weights walks --lambda 7 --k auto

#include <cstdlib>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "fwl/csl.hpp"
#include "fwl/errors.hpp"
#include "fwl/run.hpp"
#include "fwl/tud.hpp"

namespace {

struct Flags {
  std::string dataset;
  std::string name;
  std::string weights = "native";
  unsigned lambda = 1;
  std::string k = "1";
  unsigned h = 3;
  double gamma = 1.0;
  double beta = 1.0;
  std::string variant = "linear";
  bool normalize = false;
  std::string format = "csv";
  std::string out;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  unsigned copies = 10;
  std::size_t limit = 0;
  std::string manifest;
  long dump = -1;
};

void add_dataset_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--dataset", f.dataset, "TUDataset directory, or 'csl' for the CSL benchmark");
  cmd->add_option("--name", f.name, "dataset file prefix (default: directory name)");
  cmd->add_option("--weights", f.weights, "edge weights: native|degree|walks|triangles")
      ->check(CLI::IsMember({"native", "degree", "walks", "triangles"}));
  cmd->add_option("--lambda", f.lambda, "maximal walk length for --weights walks");
  cmd->add_option("--k", f.k, "filtration length, integer >= 1 or 'auto'");
  cmd->add_option("--h", f.h, "WL depth");
  cmd->add_option("--seed", f.seed, "seed for generated datasets");
  cmd->add_option("--copies", f.copies, "permuted copies per CSL class");
  cmd->add_option("--limit", f.limit, "use only the first N graphs");
  cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)");
}

fwl::RunOptions to_options(const Flags& f) {
  fwl::RunOptions o;
  o.dataset = f.dataset;
  o.name = f.name;
  o.weights.kind = fwl::parse_weight_kind(f.weights);
  o.weights.lambda = f.lambda;
  o.length = fwl::parse_filtration_length(f.k);
  o.kernel.h = f.h;
  o.kernel.gamma = f.gamma;
  o.kernel.beta = f.beta;
  o.kernel.variant = fwl::parse_variant(f.variant);
  o.kernel.normalize = f.normalize;
  o.format = fwl::parse_gram_format(f.format);
  o.out = f.out;
  o.threads = f.threads;
  o.seed = f.seed;
  o.copies = f.copies;
  if (f.limit > 0) o.limit = f.limit;
  return o;
}

int run_inspect(const Flags& f) {
  const fwl::RunOptions o = to_options(f);
  const fwl::GraphDataset ds = fwl::load_dataset(o, &std::cerr);
  const fwl::PreparedDataset p = fwl::prepare_features(ds, o.weights, o.length, o.kernel.h, o.threads);

  std::cout << "dataset " << ds.name << ": " << ds.size() << " graphs\n";
  std::cout << "thresholds (k=" << p.filtration.size() << "):";
  for (double a : p.filtration.thresholds) std::cout << ' ' << fwl::format_value(a);
  std::cout << "\nedges per level:";
  for (double a : p.filtration.thresholds) {
    std::size_t edges = 0;
    for (const auto& g : p.weighted.graphs)
      for (double w : g.edge_weights()) edges += w >= a ? 1 : 0;
    std::cout << ' ' << edges;
  }
  std::size_t total = 0, lo = SIZE_MAX, hi = 0;
  for (const auto& t : p.tables) {
    total += t.feature_count();
    lo = std::min(lo, t.feature_count());
    hi = std::max(hi, t.feature_count());
  }
  std::cout << "\ndistinct features: " << p.interner.size() << "\nfeatures per graph: min " << lo
            << ", mean " << static_cast<double>(total) / static_cast<double>(p.tables.size())
            << ", max " << hi << '\n';
  if (f.dump >= 0) {
    if (static_cast<std::size_t>(f.dump) >= p.tables.size())
      throw fwl::ArgumentError("--dump index out of range");
    p.tables[f.dump].dump(std::cout, p.interner);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weisfeiler-Lehman filtration kernels"};
  // `--h` is the WL depth, so help is long-form only (inherited by subcommands).
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Flags f;

  auto* compute = app.add_subcommand("compute", "compute a Gram matrix and its run manifest");
  add_dataset_flags(compute, f);
  compute->add_option("--gamma", f.gamma, "base kernel decay");
  compute->add_option("--beta", f.beta, "mass RBF width (product variant)");
  compute->add_option("--variant", f.variant, "linear|product")
      ->check(CLI::IsMember({"linear", "product"}));
  compute->add_flag("--normalize", f.normalize, "cosine-normalize the Gram matrix");
  compute->add_option("--format", f.format, "csv|libsvm")->check(CLI::IsMember({"csv", "libsvm"}));
  compute->add_option("--out", f.out, "output Gram file");
  compute->add_option("--manifest", f.manifest, "replay the run recorded in a manifest");

  auto* csl = app.add_subcommand("csl", "write the CSL benchmark in TUDataset format");
  csl->add_option("--out", f.out, "output directory")->required();
  csl->add_option("--copies", f.copies, "permuted copies per class");
  csl->add_option("--seed", f.seed, "permutation seed");

  auto* inspect = app.add_subcommand("inspect", "print thresholds, level edge counts and feature sizes");
  add_dataset_flags(inspect, f);
  inspect->add_option("--dump", f.dump, "print the feature table of graph i");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      fwl::RunOptions o;
      if (!f.manifest.empty()) {
        o = fwl::read_manifest(f.manifest).options;
        if (!f.out.empty()) o.out = f.out;
      } else {
        if (f.dataset.empty()) throw fwl::ArgumentError("--dataset is required");
        o = to_options(f);
      }
      fwl::run_compute(o, std::cout);
    } else if (*csl) {
      fwl::GraphDataset ds = fwl::generate_csl_benchmark(f.copies, f.seed);
      fwl::write_tud_dataset(ds, f.out);
      std::cout << "wrote " << ds.size() << " graphs to " << f.out << '\n';
    } else if (*inspect) {
      if (f.dataset.empty()) throw fwl::ArgumentError("--dataset is required");
      return run_inspect(f);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
