#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sepkit/bitset.hpp"

namespace sepkit {

using VertexSet = Bitset;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Caller violated a documented precondition.
struct ContractError : Error {
  using Error::Error;
};
// Input exceeds an explicit brute-force guard.
struct ScaleError : Error {
  using Error::Error;
};
struct ParseError : Error {
  ParseError(const std::string& msg, int line) : Error(msg + " (line " + std::to_string(line) + ")"), line_no(line) {}
  int line_no;
};

// Simple undirected graph on dense vertex ids 0..n-1 with optional positive
// integer vertex weights (default 1) and optional string labels.
//
// origin() maps local ids back to the ids of the graph an induced subgraph or
// saturation was taken from; chains of such operations compose the map, so a
// vertex of a deeply nested subgraph still knows its id in the root graph.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n)
      : n_(n), adj_(n, Bitset(n)), weights_(n, 1) {}

  int n() const { return n_; }
  int m() const;

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const {
    return u >= 0 && u < n_ && v >= 0 && v < n_ && adj_[u].test(v);
  }
  const Bitset& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  VertexSet vertices() const { return Bitset::full(n_); }

  void set_weight(int v, int64_t w);
  int64_t weight(int v) const { return weights_[v]; }
  int64_t weight_of(const VertexSet& s) const;
  int64_t total_weight() const { return weight_of(vertices()); }
  bool has_nonunit_weights() const;

  void set_label(int v, std::string label);
  std::string label(int v) const;
  bool has_labels() const { return !labels_.empty(); }

  // Fill edges introduced by saturate(); provenance only, they are regular
  // edges for every algorithm.
  const std::vector<std::pair<int, int>>& fill_edges() const { return fill_edges_; }
  void mark_fill_edge(int u, int v);

  // Identity when the graph was built directly.
  int origin_of(int v) const { return origin_.empty() ? v : origin_[v]; }
  // local set mapped to root ids, in a universe of root_n vertices
  VertexSet origin_set(const VertexSet& local, int root_n) const;
  void set_origin(std::vector<int> origin) { origin_ = std::move(origin); }
  const std::vector<int>& raw_origin() const { return origin_; }

  // Re-indexed induced subgraph; origin maps composed, weights, labels and
  // fill flags carried over.
  Graph induced_subgraph(const VertexSet& keep) const;

private:
  int n_ = 0;
  std::vector<Bitset> adj_;
  std::vector<int64_t> weights_;
  std::vector<std::string> labels_;
  std::vector<int> origin_;
  std::vector<std::pair<int, int>> fill_edges_;
};

// Minimal separator together with its witness: at least two full
// components, i.e. components C of G - set with N(C) = set.
struct Separator {
  VertexSet set;
  std::vector<VertexSet> full_components;

  int size() const { return set.count(); }
  int64_t weight(const Graph& g) const { return g.weight_of(set); }
};

struct Cut {
  VertexSet side_a;
  VertexSet side_b;
  int cutset_size = 0;
  bool connected = false;   // both sides induce connected subgraphs
  bool nontrivial = false;  // both sides have >= 2 vertices
};

// Connected components of g - removed, sorted by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

// N(x) = union of N(v) for v in x, minus x.
VertexSet neighborhood(const Graph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

// Components C of g - s with N(C) = s exactly.
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s);

// Witnessed minimality test: s is a minimal separator iff at least two full
// components exist.
std::optional<Separator> is_minimal_separator(const Graph& g, const VertexSet& s);

// A minimal a,b-separator, computed as N(C_b) where C_b is the component of b
// in g - N(a). Throws if a,b are adjacent or lie in different components.
Separator close_minimal_separator(const Graph& g, int a, int b);

// The graph G(C,S): induced subgraph on c + s with s completed into a clique.
// c must be a component of g - s. Added pairs are flagged as fill edges.
Graph saturate(const Graph& g, const VertexSet& c, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& x);
bool is_connected(const Graph& g);

// Smallest nonadjacent pair (u,v), u < v, lexicographic; nullopt on cliques.
std::optional<std::pair<int, int>> first_nonadjacent_pair(const Graph& g);

// Definitional probe used by tests as an independent check of witnessed
// minimality: some pair a,b is separated by s but by no proper subset of s.
bool is_minimal_separator_definitional(const Graph& g, const VertexSet& s);

bool separates(const Graph& g, const VertexSet& s, int a, int b);

}  // namespace sepkit
