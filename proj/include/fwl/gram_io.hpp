#pragma once

#include <filesystem>
#include <string>

#include "fwl/kernels.hpp"

namespace fwl {

enum class GramFormat { csv, libsvm };

std::string to_string(GramFormat f);
GramFormat parse_gram_format(const std::string& name);

/// Decimal rendering with 17 significant digits (round-trips exactly).
std::string format_value(double v);

/// csv: n lines of n comma-separated values.
/// libsvm: line i is `<class> 0:<i> 1:K(i,1) ... n:K(i,n)`, i 1-based
/// (precomputed-kernel input). Throws IoError if the file cannot be written.
void write_gram(const GramMatrix& m, GramFormat format, const std::filesystem::path& path);

/// Parses a csv Gram file. Throws FormatError on ragged or non-numeric rows.
GramMatrix read_gram_csv(const std::filesystem::path& path);

}  // namespace fwl
