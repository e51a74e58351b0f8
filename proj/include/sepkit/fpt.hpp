#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "sepkit/graph.hpp"

namespace sepkit {

// One saturation step of the recursion: the graph it started from, the
// separator chosen there, and the component that was saturated. The next
// graph in the chain is saturate(graph, component, separator).
struct LineageStep {
  Graph graph;          // identity-origin at the recursion root
  VertexSet separator;  // local ids of graph
  VertexSet component;  // local ids of graph
};

// Persistent root-to-leaf chain; extending shares the prefix, so sibling
// branches of the recursion never copy each other's steps.
class Lineage {
public:
  Lineage() = default;
  Lineage extend(std::shared_ptr<const LineageStep> step) const;
  bool empty() const { return tail_ == nullptr; }
  const LineageStep& last() const;
  // root-first
  std::vector<std::shared_ptr<const LineageStep>> steps() const;

private:
  struct Node {
    std::shared_ptr<const LineageStep> step;
    std::shared_ptr<const Node> parent;
  };
  std::shared_ptr<const Node> tail_;
};

// Recursion tree recorded when no large separator shows up: leaves hold whole
// vertex sets of small graphs, internal nodes hold the separator that split
// them. All vertex sets are in the ids of the graph the recursion ran on.
struct DecompTree {
  struct Node {
    VertexSet vertices;
    bool is_leaf = false;
    std::vector<int> children;
  };
  std::vector<Node> nodes;
  int root = -1;
};

struct LargeSeparatorOutcome {
  Separator separator;  // certified against the recursion's root graph
};
struct DecompositionOutcome {
  DecompTree tree;
};
struct CliqueSplitOutcome {
  VertexSet separator;  // clique minimal separator of the root graph
  VertexSet component;  // a full component of it, canonical first
};
using FindSepOutcome = std::variant<LargeSeparatorOutcome, DecompositionOutcome, CliqueSplitOutcome>;

struct SolveStats {
  int find_sep_calls = 0;
  int clique_splits = 0;
  int dp_runs = 0;
  struct DpRun {
    int width;
    int64_t k;
    bool validated;
  };
  std::vector<DpRun> dp_log;
};

// The four-case recursion. h must carry an identity origin (it is the
// "original graph" its own clique checks refer to); recursive levels are
// saturations of it. s is the separator the caller split on (empty at the
// root), with |s| < k (weight < k in weighted mode).
FindSepOutcome find_sep(const Graph& h, const VertexSet& s, int64_t k, const Lineage& lineage,
                        const Graph& root, bool weighted, SolveStats* stats = nullptr);

// Large-clique extraction: the final graph of the chain is a clique on
// k_clique (>= 2k vertices) that is not a clique in the root graph; walking
// back to the last level where it is not a clique yields a nonadjacent pair
// with >= k common neighbors, and closing that pair gives a minimal separator
// of the root graph of size (weight) >= k.
Separator extract_large_separator(const Lineage& lineage, const Graph& final_graph,
                                  const VertexSet& k_clique_root_ids, const Graph& root, int64_t k,
                                  bool weighted);

struct SolveResult {
  bool decision = false;
  std::optional<Separator> certificate;  // certified against the input graph
  SolveStats stats;
};

// Decides whether g has a minimal separator of size (weight) >= k and
// produces a certified witness when it does. Total function over all graphs,
// connected or not, k >= 0.
SolveResult solve(const Graph& g, int64_t k, bool weighted = false);

int64_t set_value(const Graph& g, const VertexSet& s, bool weighted);

}  // namespace sepkit
