#include "sepkit/fpt.hpp"

#include <algorithm>

#include "sepkit/td.hpp"

namespace sepkit {

int64_t set_value(const Graph& g, const VertexSet& s, bool weighted) {
  return weighted ? g.weight_of(s) : s.count();
}

Lineage Lineage::extend(std::shared_ptr<const LineageStep> step) const {
  Lineage out;
  out.tail_ = std::make_shared<Node>(Node{std::move(step), tail_});
  return out;
}

const LineageStep& Lineage::last() const {
  if (!tail_) throw ContractError("empty lineage has no last step");
  return *tail_->step;
}

std::vector<std::shared_ptr<const LineageStep>> Lineage::steps() const {
  std::vector<std::shared_ptr<const LineageStep>> out;
  for (const Node* n = tail_.get(); n; n = n->parent.get()) out.push_back(n->step);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

Graph strip_origin(const Graph& g) {
  Graph out = g;
  out.set_origin({});
  return out;
}

// local ids of `sub` for the vertex set `roots` of g (root ids), assuming g
// was carved out of the root graph
VertexSet to_local(const Graph& g, const VertexSet& root_set) {
  Bitset out(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (root_set.test(g.origin_of(v))) out.set(v);
  if (out.count() != root_set.count())
    throw ContractError("vertex set is not contained in the graph");
  return out;
}

int append_tree(DecompTree& dst, const DecompTree& src, int node) {
  const auto& s = src.nodes[node];
  DecompTree::Node copy{s.vertices, s.is_leaf, {}};
  for (int c : s.children) copy.children.push_back(append_tree(dst, src, c));
  dst.nodes.push_back(std::move(copy));
  return int(dst.nodes.size()) - 1;
}

DecompTree leaf_tree(VertexSet bag) {
  DecompTree t;
  t.nodes.push_back({std::move(bag), true, {}});
  t.root = 0;
  return t;
}

}  // namespace

Separator extract_large_separator(const Lineage& lineage, const Graph& final_graph,
                                  const VertexSet& k_clique_root_ids, const Graph& root, int64_t k,
                                  bool weighted) {
  auto steps = lineage.steps();
  if (!is_clique(final_graph, to_local(final_graph, k_clique_root_ids)))
    throw ContractError("extract_large_separator: set is not a clique in the final graph");
  if (is_clique(root, k_clique_root_ids))
    throw ContractError("extract_large_separator: set is a clique in the original graph");

  // maximum j with G_j[K] not a clique; G_0 = root qualifies, the final graph
  // does not, so the scan always lands.
  const Graph* gj = nullptr;
  for (int j = int(steps.size()) - 1; j >= 0 && !gj; --j) {
    const Graph& cand = steps[j]->graph;
    if (!is_clique(cand, to_local(cand, k_clique_root_ids))) gj = &cand;
  }
  if (!gj) throw ContractError("extract_large_separator: inconsistent lineage");

  VertexSet k_local = to_local(*gj, k_clique_root_ids);
  int u = -1, v = -1;
  for (int a = k_local.first(); a != -1 && u == -1; a = k_local.next(a))
    for (int b = k_local.next(a); b != -1; b = k_local.next(b))
      if (!gj->has_edge(a, b)) {
        u = a;
        v = b;
        break;
      }
  if (u == -1) throw ContractError("extract_large_separator: no nonadjacent pair found");

  Separator local = close_minimal_separator(*gj, u, v);
  VertexSet on_root = gj->origin_set(local.set, root.n());
  auto cert = is_minimal_separator(root, on_root);
  if (!cert || set_value(root, on_root, weighted) < k)
    throw Error("extract_large_separator: lifted separator failed certification");
  return *cert;
}

FindSepOutcome find_sep(const Graph& h, const VertexSet& s, int64_t k, const Lineage& lineage,
                        const Graph& root, bool weighted, SolveStats* stats) {
  if (stats) ++stats->find_sep_calls;
  if (s.universe() != h.n()) throw ContractError("find_sep: separator universe mismatch");
  if (set_value(h, s, weighted) >= k) throw ContractError("find_sep: invariant value(s) < k violated");

  // case 1: small enough to become a single bag
  if (int64_t(h.n()) <= 2 * k - 1)
    return DecompositionOutcome{leaf_tree(h.origin_set(h.vertices(), root.n()))};

  auto pair = first_nonadjacent_pair(h);
  if (!pair) {
    // case 2-3: h is complete, so it has at least 2k vertices here
    VertexSet k_root = h.origin_set(h.vertices(), root.n());
    if (!is_clique(root, k_root)) {
      // 2-3-1
      return LargeSeparatorOutcome{
          extract_large_separator(lineage, h, k_root, root, k, weighted)};
    }
    // 2-3-2: split on the last separator of the chain, a clique minimal
    // separator of the root graph
    if (s.none() || lineage.empty())
      throw ContractError("find_sep: complete graph at the recursion root");
    VertexSet s_root = h.origin_set(s, root.n());
    auto full = full_components(root, s_root);
    if (full.size() < 2)
      throw Error("find_sep: clique split separator lost minimality on the root graph");
    return CliqueSplitOutcome{s_root, full[0]};
  }

  Separator chosen = close_minimal_separator(h, pair->first, pair->second);
  const VertexSet& sprime = chosen.set;

  if (set_value(h, sprime, weighted) >= k) {
    // case 2-1, lift and certify on the root graph
    VertexSet on_root = h.origin_set(sprime, root.n());
    auto cert = is_minimal_separator(root, on_root);
    if (!cert) throw Error("find_sep: separator failed root certification");
    return LargeSeparatorOutcome{*cert};
  }

  // case 2-2: recurse on every saturated component
  DecompTree combined;
  std::vector<int> child_roots;
  for (const auto& comp : components(h, sprime)) {
    auto step = std::make_shared<LineageStep>(LineageStep{h, sprime, comp});
    Graph child = saturate(h, comp, sprime);
    VertexSet s_child = to_local(child, h.origin_set(sprime, root.n()) /* root ids */);
    auto outcome = find_sep(child, s_child, k, lineage.extend(step), root, weighted, stats);
    if (!std::holds_alternative<DecompositionOutcome>(outcome)) return outcome;
    child_roots.push_back(
        append_tree(combined, std::get<DecompositionOutcome>(outcome).tree,
                    std::get<DecompositionOutcome>(outcome).tree.root));
  }
  combined.nodes.push_back({h.origin_set(sprime, root.n()), false, std::move(child_roots)});
  combined.root = int(combined.nodes.size()) - 1;
  return DecompositionOutcome{std::move(combined)};
}

namespace {

// Lifts a separator found in `sub` (a nested induced subgraph of root) back
// to root ids and re-certifies it there.
Separator lift_to_root(const Graph& sub, const VertexSet& local, const Graph& root) {
  VertexSet on_root = sub.origin_set(local, root.n());
  auto cert = is_minimal_separator(root, on_root);
  if (!cert) throw Error("solve: certificate failed to lift to the input graph");
  return *cert;
}

// cur is an induced subgraph of root (origin composed); certificates are
// returned in root ids.
std::optional<Separator> solve_rec(const Graph& cur, const Graph& root, int64_t k, bool weighted,
                                   SolveStats& stats) {
  auto comps = components(cur, Bitset(cur.n()));
  if (comps.empty()) return std::nullopt;

  if (comps.size() >= 2) {
    // the empty set is a minimal separator of a disconnected graph; anything
    // bigger lives inside one component
    if (k <= 0) return lift_to_root(cur, Bitset(cur.n()), root);
    for (const auto& comp : comps) {
      Graph sub = cur.induced_subgraph(comp);
      if (auto found = solve_rec(sub, root, k, weighted, stats)) return found;
    }
    return std::nullopt;
  }

  // connected
  if (is_clique(cur, cur.vertices())) return std::nullopt;
  if (k <= 0) {
    auto pair = first_nonadjacent_pair(cur);
    Separator any = close_minimal_separator(cur, pair->first, pair->second);
    return lift_to_root(cur, any.set, root);
  }

  Graph fresh = strip_origin(cur);
  auto outcome = find_sep(fresh, Bitset(fresh.n()), k, Lineage{}, fresh, weighted, &stats);

  if (auto* large = std::get_if<LargeSeparatorOutcome>(&outcome))
    return lift_to_root(cur, large->separator.set, root);

  if (auto* decomp = std::get_if<DecompositionOutcome>(&outcome)) {
    TreeDecomposition td = assemble_td(decomp->tree);
    bool ok = validate_td(fresh, td);
    ++stats.dp_runs;
    stats.dp_log.push_back({td.width(), k, ok});
    if (!ok) throw Error("solve: assembled tree decomposition failed validation");
    auto best = max_minimal_separator_dp(fresh, td, weighted);
    if (best && best->second >= k) return lift_to_root(cur, best->first.set, root);
    return std::nullopt;
  }

  const auto& split = std::get<CliqueSplitOutcome>(outcome);
  ++stats.clique_splits;
  if (!is_clique(fresh, split.separator) || !is_minimal_separator(fresh, split.separator))
    throw Error("solve: clique split separator failed its invariants");

  Graph part1 = cur.induced_subgraph(split.component | split.separator);
  if (auto found = solve_rec(part1, root, k, weighted, stats)) return found;
  Graph part2 = cur.induced_subgraph(cur.vertices() - split.component);
  return solve_rec(part2, root, k, weighted, stats);
}

}  // namespace

SolveResult solve(const Graph& g, int64_t k, bool weighted) {
  if (k < 0) throw ContractError("solve: k must be nonnegative");
  SolveResult result;
  Graph root = strip_origin(g);
  auto cert = solve_rec(root, root, k, weighted, result.stats);
  if (result.stats.clique_splits > g.n())
    throw Error("solve: clique split count exceeded the vertex count");
  result.decision = cert.has_value();
  if (cert) {
    if (set_value(root, cert->set, weighted) < k) throw Error("solve: certificate below threshold");
    result.certificate = std::move(cert);
  }
  return result;
}

}  // namespace sepkit
