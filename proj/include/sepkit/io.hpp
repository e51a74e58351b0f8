#pragma once

#include <string>

#include "sepkit/graph.hpp"

namespace sepkit {

enum class GraphFormat { EdgeList, Dimacs };

GraphFormat parse_format_name(const std::string& name);

// Edge list: '#' starts a comment, "u v" per edge, optional "w u x" lines
// giving vertex u weight x. Vertex count = 1 + max id mentioned.
// DIMACS: "c" comments, "p edge <n> <m>" header, "e u v" lines, 1-indexed;
// ids are shifted down by one. Duplicate edges collapse in both formats.
Graph parse_graph(const std::string& text, GraphFormat format);

Graph read_graph_file(const std::string& path, GraphFormat format);

// Canonical edge list: edges sorted lexicographically, then weight lines for
// vertices with weight != 1, plus "w u 1" anchors for isolated vertices so
// the vertex count round-trips.
std::string serialize_edge_list(const Graph& g);

std::string serialize_dimacs(const Graph& g);

}  // namespace sepkit
