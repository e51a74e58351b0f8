#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/fpt.hpp"
#include "sepkit/graph.hpp"

namespace sepkit {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;  // tree edges between bag indices

  int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, b.count() - 1);
    return w;
  }
};

// Builds the decomposition a DecompTree encodes: leaf vertex sets become
// bags, every internal separator becomes a bag wired to one bag containing it
// inside each child decomposition.
TreeDecomposition assemble_td(const DecompTree& tree);

// The three defining properties, plus tree-ness of the bag relation.
bool validate_td(const Graph& g, const TreeDecomposition& t);

// Maximum cardinality (weight) minimal separator by dynamic programming over
// the decomposition. Each bag vertex is colored SEP / A / B / OUT where A and
// B are the two full components of the separator being built; connectivity of
// A and B is tracked through block partitions of the bag, and every SEP
// vertex must acquire neighbors on both sides before it is forgotten.
// Nullopt when the graph has no minimal separator at all.
std::optional<std::pair<Separator, int64_t>>
max_minimal_separator_dp(const Graph& g, const TreeDecomposition& t, bool weighted = false);

// PACE-style exchange format: "s td <#bags> <width+1> <n>", "b <id> <v...>"
// bag lines, then one "u v" line per tree edge; ids and vertices 1-indexed.
std::string serialize_td_pace(const TreeDecomposition& t, int n_vertices);
TreeDecomposition parse_td_pace(const std::string& text);

}  // namespace sepkit
