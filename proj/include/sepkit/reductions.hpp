#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sepkit/graph.hpp"

namespace sepkit {

enum class ReductionKind { Subdivision, Cobipartite, LineGraph, Composition };

std::string reduction_kind_name(ReductionKind k);

// k' = k (identity), k' = total - k with the optimization direction flipped
// (complement_flip), or k' = k + delta (increment).
struct ThresholdMap {
  std::string name;
  int64_t total = 0;
  int64_t delta = 0;
};

struct SubdivisionData {
  std::vector<std::array<int, 3>> edge_vertices;  // {u, v, v_e}
};

struct CobipartiteData {
  Graph reduced;  // source after preprocessing; target complements this
  VertexSet side_a, side_b;               // bipartition of reduced, local ids
  std::vector<int> removed_forced;        // isolated in the source: in every maximal IS
  std::vector<int> removed_irrelevant;    // adjacent to the whole other side
};

struct LineGraphData {
  Graph pendant_graph;                            // source plus one pendant per vertex
  std::vector<std::array<int, 3>> edge_vertices;  // pendant-graph edge {u,v} -> line vertex
  std::vector<std::array<int, 2>> pendants;       // {v, pendant id}
};

struct CompositionData {
  std::vector<Graph> parts;
  std::vector<int> offsets;  // part i occupies [offsets[i], offsets[i] + n_i)
  int universal_vertex = -1;
};

struct ReductionCertificate {
  ReductionKind kind;
  Graph source;
  Graph target;
  ThresholdMap threshold_map;
  std::variant<SubdivisionData, CobipartiteData, LineGraphData, CompositionData> data;
};

// Subdivide every edge of a connected cubic graph once. Connected cuts of the
// source correspond to minimal separators of the (bipartite, subcubic) target
// of the same size.
ReductionCertificate subdivide_cubic(const Graph& g);
VertexSet subdivision_forward(const ReductionCertificate& cert, const Cut& cut);
Cut subdivision_backward(const ReductionCertificate& cert, const VertexSet& separator);

// Complement chain for bipartite g: maximal independent sets hitting both
// sides correspond to minimal separators of the co-bipartite target by set
// complement. Preprocessing deletes vertices that are isolated or see the
// whole other side, recording them in the certificate.
ReductionCertificate cobipartite_reduction(const Graph& g, const VertexSet& side_a,
                                           const VertexSet& side_b);
VertexSet cobipartite_forward(const ReductionCertificate& cert, const VertexSet& max_ind_set);
VertexSet cobipartite_backward(const ReductionCertificate& cert, const VertexSet& separator);

// L(g): one vertex per edge, adjacent iff the edges share an endpoint.
std::pair<Graph, std::vector<std::array<int, 3>>> line_graph(const Graph& g);

// Attach a pendant to every vertex, then take the line graph. Non-trivial
// connected cuts of the pendant graph correspond to minimal separators of the
// target of the same size (thresholds k >= 2).
ReductionCertificate linegraph_reduction(const Graph& g);
VertexSet linegraph_forward(const ReductionCertificate& cert, const Cut& pendant_cut);
Cut linegraph_backward(const ReductionCertificate& cert, const VertexSet& separator);

// Disjoint union plus a universal vertex; thresholds shift by one.
ReductionCertificate compose_universal(const std::vector<Graph>& graphs);
VertexSet composition_forward(const ReductionCertificate& cert, int part, const VertexSet& separator);
std::pair<int, VertexSet> composition_backward(const ReductionCertificate& cert,
                                               const VertexSet& separator);

struct VerifyReport {
  bool pass = false;
  std::string kind;
  std::optional<int64_t> source_value;  // nullopt: no feasible solution on that side
  std::optional<int64_t> target_value;
  std::optional<int64_t> first_violation;  // threshold where the biconditional broke
  std::vector<std::string> notes;

  std::string summary() const;
};

// Executes the reduction's biconditional with the brute-force oracles on both
// graphs, for every threshold in the map's validity range.
VerifyReport verify_reduction(const ReductionCertificate& cert, int max_n = 0);

}  // namespace sepkit
