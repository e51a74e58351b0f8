#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sepkit/graph.hpp"

namespace sepkit {

// Default cap for the exhaustive oracles (20 unless SEPKIT_ORACLE_MAX_N is
// set). The guards are explicit: an oracle either answers exactly or refuses.
int oracle_max_n_default();

// Every S with at least two full components, with witnesses, sorted.
std::vector<Separator> enum_minimal_separators_bruteforce(const Graph& g, int max_n = 0);

// Polynomial-delay enumeration: seed with the close separators N(C) for
// components C of G - N[v], then expand each known S by each x in S via the
// components of G - (S + N(x)), until closure. Emits each separator once, in
// discovery order; return false from the sink to stop early.
void enum_minimal_separators_delay(const Graph& g, const std::function<bool(const Separator&)>& emit);
std::vector<Separator> enum_minimal_separators_delay(const Graph& g);

// Maximum cardinality (or total weight) minimal separator; nullopt when the
// graph has none.
std::optional<std::pair<Separator, int64_t>>
max_minimal_separator_bruteforce(const Graph& g, bool weighted = false, int max_n = 0);

// Best cut with both sides inducing connected subgraphs; nontrivial requires
// both sides to have >= 2 vertices. Input must be connected.
std::optional<Cut> max_connected_cut_bruteforce(const Graph& g, bool require_nontrivial, int max_n = 0);

// Minimum cardinality maximal independent set.
VertexSet min_independent_dominating_set_bruteforce(const Graph& g, int max_n = 0);

struct MaximalBiclique {
  VertexSet vertices;
  bool hits_both_sides;
};

// All inclusion-maximal U inducing a complete bipartite subgraph between
// U & side_a and U & side_b; one-sided sets are flagged.
std::vector<MaximalBiclique> maximal_bicliques_bruteforce(const Graph& g, const VertexSet& side_a,
                                                          const VertexSet& side_b, int max_n = 0);

}  // namespace sepkit
