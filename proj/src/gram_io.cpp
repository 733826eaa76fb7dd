#include "fwl/gram_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "fwl/errors.hpp"

namespace fwl {

std::string to_string(GramFormat f) { return f == GramFormat::libsvm ? "libsvm" : "csv"; }

GramFormat parse_gram_format(const std::string& name) {
  if (name == "csv") return GramFormat::csv;
  if (name == "libsvm") return GramFormat::libsvm;
  throw ArgumentError("unknown output format '" + name + "' (expected csv or libsvm)");
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.17g", v);
  return buf;
}

void write_gram(const GramMatrix& m, GramFormat format, const std::filesystem::path& path) {
  if (m.values.size() != m.n * m.n) throw ArgumentError("Gram matrix storage does not match n");
  if (format == GramFormat::libsvm && m.class_labels.size() != m.n)
    throw ArgumentError("libsvm output needs one class label per row");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (std::size_t i = 0; i < m.n; ++i) {
    if (format == GramFormat::csv) {
      for (std::size_t j = 0; j < m.n; ++j) out << (j ? "," : "") << format_value(m(i, j));
    } else {
      out << m.class_labels[i] << " 0:" << i + 1;
      for (std::size_t j = 0; j < m.n; ++j) out << ' ' << j + 1 << ':' << format_value(m(i, j));
    }
    out << '\n';
  }
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

GramMatrix read_gram_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  GramMatrix m;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++row;
    std::size_t cols = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const std::string tok = line.substr(start, comma - start);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FormatError(path.filename().string() + ":" + std::to_string(row) +
                          ": non-numeric value '" + tok + "'");
      m.values.push_back(v);
      ++cols;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (row == 1) m.n = cols;
    if (cols != m.n)
      throw FormatError(path.filename().string() + ":" + std::to_string(row) + ": expected " +
                        std::to_string(m.n) + " values, found " + std::to_string(cols));
  }
  if (row != m.n)
    throw FormatError(path.filename().string() + ": matrix is " + std::to_string(row) + "x" +
                      std::to_string(m.n) + ", expected square");
  m.graph_ids.resize(m.n);
  for (std::size_t i = 0; i < m.n; ++i) m.graph_ids[i] = i;
  return m;
}

}  // namespace fwl
