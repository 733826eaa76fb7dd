#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fwl/graph.hpp"

namespace fwl {

/// Reads a dataset in TUDataset text format from `directory`:
///
///   <name>_A.txt                comma-separated directed edges, 1-based global ids
///   <name>_graph_indicator.txt  graph id (1-based) of each vertex
///   <name>_graph_labels.txt     class label of each graph
///   <name>_node_labels.txt      optional, one integer per vertex
///   <name>_edge_attributes.txt  optional, one line per line of _A.txt
///
/// Vertices are renumbered from 0 inside each graph. Both orientations of an
/// edge collapse to one undirected edge; the first listed attribute wins.
/// Only the first edge attribute column is used, extra columns produce one
/// warning on `warnings` (pass nullptr to silence).
GraphDataset load_tud_dataset(const std::filesystem::path& directory, const std::string& name,
                              std::ostream* warnings = nullptr);

/// Writes `dataset` in the same format (both orientations of every edge,
/// node labels, and edge weights as edge attributes).
void write_tud_dataset(const GraphDataset& dataset, const std::filesystem::path& directory);

}  // namespace fwl
