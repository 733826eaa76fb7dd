#include "fwl/tud.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string_view>
#include <system_error>
#include <vector>

#include "fwl/errors.hpp"

namespace fwl {
namespace {

namespace fs = std::filesystem;

struct LineReader {
  fs::path path;
  std::ifstream in;
  std::size_t line_no = 0;

  explicit LineReader(fs::path p) : path(std::move(p)), in(path) {
    if (!in) throw IngestionError("cannot open " + path.string());
  }

  std::optional<std::vector<std::string_view>> next(std::string& buffer) {
    while (std::getline(in, buffer)) {
      ++line_no;
      std::vector<std::string_view> tokens;
      std::string_view rest = buffer;
      while (true) {
        auto comma = rest.find(',');
        auto tok = rest.substr(0, comma);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r'))
          tok.remove_suffix(1);
        tokens.push_back(tok);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      if (tokens.size() == 1 && tokens[0].empty()) continue;  // blank line
      return tokens;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError(path.filename().string() + ":" + std::to_string(line_no) + ": " + what);
  }

  template <class T>
  T parse(std::string_view tok) const {
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
      fail("non-numeric token '" + std::string(tok) + "'");
    return value;
  }
};

std::vector<std::int64_t> read_integer_column(const fs::path& path) {
  LineReader reader(path);
  std::vector<std::int64_t> values;
  std::string buffer;
  while (auto tokens = reader.next(buffer)) {
    if (tokens->size() != 1) reader.fail("expected a single integer");
    values.push_back(reader.parse<std::int64_t>((*tokens)[0]));
  }
  return values;
}

fs::path require(const fs::path& directory, const std::string& name, const char* suffix) {
  fs::path p = directory / (name + suffix);
  if (!fs::is_regular_file(p)) throw IngestionError("missing dataset file " + p.string());
  return p;
}

}  // namespace

GraphDataset load_tud_dataset(const fs::path& directory, const std::string& name,
                              std::ostream* warnings) {
  const fs::path adjacency_path = require(directory, name, "_A.txt");
  const fs::path indicator_path = require(directory, name, "_graph_indicator.txt");
  const fs::path class_path = require(directory, name, "_graph_labels.txt");
  const fs::path node_label_path = directory / (name + "_node_labels.txt");
  const fs::path edge_attr_path = directory / (name + "_edge_attributes.txt");

  const std::vector<std::int64_t> indicator = read_integer_column(indicator_path);
  const std::vector<std::int64_t> class_labels = read_integer_column(class_path);
  const std::size_t total_vertices = indicator.size();

  std::int64_t graph_count = 0;
  for (std::size_t i = 0; i < indicator.size(); ++i) {
    if (indicator[i] < 1)
      throw FormatError(indicator_path.filename().string() + ":" + std::to_string(i + 1) +
                        ": graph ids are 1-based");
    graph_count = std::max(graph_count, indicator[i]);
  }
  if (static_cast<std::size_t>(graph_count) != class_labels.size())
    throw FormatError(class_path.filename().string() + ": expected " + std::to_string(graph_count) +
                      " class labels, found " + std::to_string(class_labels.size()));

  std::vector<std::int64_t> node_labels;
  if (fs::is_regular_file(node_label_path)) {
    node_labels = read_integer_column(node_label_path);
    if (node_labels.size() != total_vertices)
      throw FormatError(node_label_path.filename().string() + ": expected " +
                        std::to_string(total_vertices) + " node labels, found " +
                        std::to_string(node_labels.size()));
  }

  // Local numbering in order of appearance within each graph.
  std::vector<Vertex> local_id(total_vertices);
  std::vector<std::size_t> sizes(graph_count, 0);
  for (std::size_t i = 0; i < total_vertices; ++i) {
    auto gi = static_cast<std::size_t>(indicator[i] - 1);
    local_id[i] = static_cast<Vertex>(sizes[gi]++);
  }

  std::optional<LineReader> attr_reader;
  if (fs::is_regular_file(edge_attr_path)) attr_reader.emplace(edge_attr_path);
  bool warned_columns = false;

  std::vector<std::map<std::pair<Vertex, Vertex>, double>> edge_sets(graph_count);
  LineReader reader(adjacency_path);
  std::string buffer, attr_buffer;
  while (auto tokens = reader.next(buffer)) {
    if (tokens->size() != 2) reader.fail("expected 'u, v'");
    const auto a = reader.parse<std::int64_t>((*tokens)[0]);
    const auto b = reader.parse<std::int64_t>((*tokens)[1]);
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > total_vertices ||
        static_cast<std::size_t>(b) > total_vertices)
      reader.fail("vertex id out of range 1.." + std::to_string(total_vertices));
    if (indicator[a - 1] != indicator[b - 1])
      reader.fail("edge " + std::to_string(a) + "-" + std::to_string(b) + " crosses graphs " +
                  std::to_string(indicator[a - 1]) + " and " + std::to_string(indicator[b - 1]));
    if (a == b) reader.fail("self-loop at vertex " + std::to_string(a));

    double weight = 0.0;
    if (attr_reader) {
      auto attrs = attr_reader->next(attr_buffer);
      if (!attrs) attr_reader->fail("fewer edge attribute lines than edges");
      weight = attr_reader->parse<double>((*attrs)[0]);
      if (attrs->size() > 1 && !warned_columns && warnings) {
        *warnings << "warning: " << edge_attr_path.filename().string() << " has "
                  << attrs->size() << " columns; only the first is used as edge weight\n";
        warned_columns = true;
      }
    }
    Vertex u = local_id[a - 1], v = local_id[b - 1];
    if (u > v) std::swap(u, v);
    edge_sets[indicator[a - 1] - 1].emplace(std::pair(u, v), weight);
  }

  GraphDataset dataset;
  dataset.name = name;
  dataset.class_labels = class_labels;
  std::vector<std::vector<VertexLabel>> labels(graph_count);
  for (std::size_t i = 0; i < total_vertices; ++i)
    labels[indicator[i] - 1].push_back(node_labels.empty() ? 0 : node_labels[i]);
  dataset.graphs.reserve(graph_count);
  for (std::int64_t gi = 0; gi < graph_count; ++gi) {
    std::vector<Edge> edges;
    std::vector<double> weights;
    for (const auto& [uv, w] : edge_sets[gi]) {
      edges.push_back({uv.first, uv.second});
      weights.push_back(w);
    }
    dataset.graphs.push_back(
        LabeledGraph::from_edges(sizes[gi], std::move(labels[gi]), edges, std::move(weights)));
  }
  return dataset;
}

void write_tud_dataset(const GraphDataset& dataset, const fs::path& directory) {
  dataset.validate();
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw IoError("cannot create " + directory.string() + ": " + ec.message());
  auto open = [&](const char* suffix) {
    fs::path p = directory / (dataset.name + suffix);
    std::ofstream out(p);
    if (!out) throw IoError("cannot write " + p.string());
    return out;
  };
  auto a = open("_A.txt");
  auto indicator = open("_graph_indicator.txt");
  auto classes = open("_graph_labels.txt");
  auto node_labels = open("_node_labels.txt");
  auto edge_attrs = open("_edge_attributes.txt");
  edge_attrs.precision(17);

  std::size_t base = 1;
  for (std::size_t gi = 0; gi < dataset.size(); ++gi) {
    const auto& g = dataset.graphs[gi];
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      indicator << gi + 1 << '\n';
      node_labels << g.vertex_labels()[v] << '\n';
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      a << base + u << ", " << base + v << '\n' << base + v << ", " << base + u << '\n';
      edge_attrs << g.weight(e) << '\n' << g.weight(e) << '\n';
    }
    classes << dataset.class_labels[gi] << '\n';
    base += g.vertex_count();
  }
  for (auto* s : {&a, &indicator, &classes, &node_labels, &edge_attrs})
    if (!s->flush()) throw IoError("write failed in " + directory.string());
}

}  // namespace fwl
