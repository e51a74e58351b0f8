#include "sepkit/graph.hpp"

#include <algorithm>

namespace sepkit {

int Graph::m() const {
  int deg2 = 0;
  for (int v = 0; v < n_; ++v) deg2 += adj_[v].count();
  return deg2 / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw ContractError("edge endpoint out of range");
  if (u == v) throw ContractError("self-loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

void Graph::set_weight(int v, int64_t w) {
  if (w < 1) throw ContractError("vertex weights must be >= 1");
  weights_.at(v) = w;
}

int64_t Graph::weight_of(const VertexSet& s) const {
  int64_t total = 0;
  for (int v = s.first(); v != -1; v = s.next(v)) total += weights_[v];
  return total;
}

bool Graph::has_nonunit_weights() const {
  return std::any_of(weights_.begin(), weights_.end(), [](int64_t w) { return w != 1; });
}

void Graph::set_label(int v, std::string label) {
  if (labels_.empty()) labels_.resize(n_);
  labels_.at(v) = std::move(label);
}

std::string Graph::label(int v) const {
  return labels_.empty() ? std::string{} : labels_.at(v);
}

void Graph::mark_fill_edge(int u, int v) {
  if (!has_edge(u, v)) throw ContractError("fill flag on a missing edge");
  if (u > v) std::swap(u, v);
  auto e = std::make_pair(u, v);
  auto it = std::lower_bound(fill_edges_.begin(), fill_edges_.end(), e);
  if (it == fill_edges_.end() || *it != e) fill_edges_.insert(it, e);
}

VertexSet Graph::origin_set(const VertexSet& local, int root_n) const {
  if (local.universe() != n_) throw ContractError("origin_set: universe mismatch");
  Bitset out(root_n);
  for (int v = local.first(); v != -1; v = local.next(v)) {
    int r = origin_of(v);
    if (r < 0 || r >= root_n) throw ContractError("origin_set: origin id outside root universe");
    out.set(r);
  }
  return out;
}

Graph Graph::induced_subgraph(const VertexSet& keep) const {
  std::vector<int> old_ids = keep.members();
  std::vector<int> to_new(n_, -1);
  for (size_t i = 0; i < old_ids.size(); ++i) to_new[old_ids[i]] = int(i);

  Graph sub(int(old_ids.size()));
  for (size_t i = 0; i < old_ids.size(); ++i) {
    int u = old_ids[i];
    sub.weights_[i] = weights_[u];
    if (!labels_.empty() && !labels_[u].empty()) sub.set_label(int(i), labels_[u]);
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
      if (to_new[v] != -1) sub.add_edge(int(i), to_new[v]);
  }
  for (auto [u, v] : fill_edges_)
    if (to_new[u] != -1 && to_new[v] != -1) sub.mark_fill_edge(to_new[u], to_new[v]);

  std::vector<int> origin(old_ids.size());
  for (size_t i = 0; i < old_ids.size(); ++i) origin[i] = origin_of(old_ids[i]);
  sub.set_origin(std::move(origin));
  return sub;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.n()) throw ContractError("vertex set universe mismatch");
  Bitset remaining = g.vertices() - removed;
  std::vector<VertexSet> comps;
  for (int seed = remaining.first(); seed != -1; seed = remaining.first()) {
    Bitset comp(g.n());
    Bitset frontier(g.n());
    frontier.set(seed);
    while (frontier.any()) {
      comp |= frontier;
      Bitset nxt(g.n());
      for (int v = frontier.first(); v != -1; v = frontier.next(v)) nxt |= g.adj(v);
      nxt &= remaining;
      nxt -= comp;
      frontier = nxt;
    }
    remaining -= comp;
    comps.push_back(comp);
  }
  // BFS from increasing seeds already yields the order by smallest member.
  return comps;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.n()) throw ContractError("vertex set universe mismatch");
  Bitset out(g.n());
  for (int v = x.first(); v != -1; v = x.next(v)) out |= g.adj(v);
  out -= x;
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  Bitset out = neighborhood(g, x);
  out |= x;
  return out;
}

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  for (const auto& c : components(g, s))
    if (neighborhood(g, c) == s) out.push_back(c);
  return out;
}

std::optional<Separator> is_minimal_separator(const Graph& g, const VertexSet& s) {
  auto full = full_components(g, s);
  if (full.size() < 2) return std::nullopt;
  return Separator{s, std::move(full)};
}

Separator close_minimal_separator(const Graph& g, int a, int b) {
  if (a < 0 || b < 0 || a >= g.n() || b >= g.n() || a == b)
    throw ContractError("close_minimal_separator: invalid vertex pair");
  if (g.has_edge(a, b))
    throw ContractError("close_minimal_separator: endpoints are adjacent");
  bool together = false;
  for (const auto& c : components(g, Bitset(g.n())))
    if (c.test(a)) together = c.test(b);
  if (!together)
    throw ContractError("close_minimal_separator: endpoints lie in different components");
  Bitset na = g.adj(a);
  Bitset comp_b(g.n());
  bool found = false;
  for (const auto& c : components(g, na)) {
    if (c.test(b)) {
      comp_b = c;
      found = true;
      break;
    }
  }
  if (!found || comp_b.test(a))
    throw ContractError("close_minimal_separator: endpoints are not separated by N(a)");
  VertexSet s = neighborhood(g, comp_b);
  auto sep = is_minimal_separator(g, s);
  if (!sep) throw ContractError("close_minimal_separator: endpoints lie in different components");
  return *sep;
}

Graph saturate(const Graph& g, const VertexSet& c, const VertexSet& s) {
  auto comps = components(g, s);
  if (std::find(comps.begin(), comps.end(), c) == comps.end())
    throw ContractError("saturate: c is not a component of g - s");
  Graph out = g.induced_subgraph(c | s);
  // induced_subgraph assigns local ids in ascending old-id order
  std::vector<int> s_local;
  std::vector<int> old_ids = (c | s).members();
  for (size_t i = 0; i < old_ids.size(); ++i)
    if (s.test(old_ids[i])) s_local.push_back(int(i));
  for (size_t i = 0; i < s_local.size(); ++i)
    for (size_t j = i + 1; j < s_local.size(); ++j)
      if (!out.has_edge(s_local[i], s_local[j])) {
        out.add_edge(s_local[i], s_local[j]);
        out.mark_fill_edge(s_local[i], s_local[j]);
      }
  return out;
}

bool is_clique(const Graph& g, const VertexSet& x) {
  for (int u = x.first(); u != -1; u = x.next(u)) {
    Bitset need = x;
    need.reset(u);
    if (!need.is_subset_of(g.adj(u))) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  return components(g, Bitset(g.n())).size() <= 1;
}

std::optional<std::pair<int, int>> first_nonadjacent_pair(const Graph& g) {
  for (int u = 0; u < g.n(); ++u) {
    Bitset non = g.adj(u).complement();
    non.reset(u);
    int v = non.next(u);
    if (v != -1) return std::make_pair(u, v);
  }
  return std::nullopt;
}

bool separates(const Graph& g, const VertexSet& s, int a, int b) {
  if (s.test(a) || s.test(b)) return false;
  for (const auto& c : components(g, s))
    if (c.test(a)) return !c.test(b);
  return false;
}

bool is_minimal_separator_definitional(const Graph& g, const VertexSet& s) {
  for (int a = 0; a < g.n(); ++a) {
    if (s.test(a)) continue;
    for (int b = a + 1; b < g.n(); ++b) {
      if (s.test(b)) continue;
      if (!separates(g, s, a, b)) continue;
      bool minimal = true;
      for (int v = s.first(); v != -1; v = s.next(v)) {
        Bitset sub = s;
        sub.reset(v);
        if (separates(g, sub, a, b)) {
          minimal = false;
          break;
        }
      }
      if (minimal) return true;
    }
  }
  return false;
}

}  // namespace sepkit
