#include "sepkit/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_set>

namespace sepkit {

int oracle_max_n_default() {
  if (const char* env = std::getenv("SEPKIT_ORACLE_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 20;
}

namespace {

int effective_guard(int max_n) { return max_n > 0 ? max_n : oracle_max_n_default(); }

void check_scale(const Graph& g, int max_n, const char* op) {
  int limit = effective_guard(max_n);
  if (g.n() > limit)
    throw ScaleError(std::string(op) + ": graph has " + std::to_string(g.n()) +
                     " vertices, guard is " + std::to_string(limit));
  if (g.n() > 62) throw ScaleError(std::string(op) + ": mask-based scan limited to 62 vertices");
}

std::vector<uint64_t> adjacency_masks(const Graph& g) {
  std::vector<uint64_t> adj(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= uint64_t{1} << v;
    adj[v] |= uint64_t{1} << u;
  }
  return adj;
}

uint64_t all_mask(int n) { return n == 0 ? 0 : (~uint64_t{0} >> (64 - n)); }

// Number of full components of `sub`; a component C of G[rest], rest = all - sub,
// is full when N(C) == sub.
int count_full_components_mask(const std::vector<uint64_t>& adj, uint64_t all, uint64_t sub) {
  uint64_t remaining = all & ~sub;
  int full = 0;
  while (remaining) {
    uint64_t comp = 0;
    uint64_t frontier = remaining & -remaining;
    uint64_t nb = 0;
    while (frontier) {
      comp |= frontier;
      uint64_t nxt = 0;
      uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        nxt |= adj[v];
      }
      nb |= nxt;
      frontier = nxt & remaining & ~comp;
    }
    if ((nb & ~comp) == sub) ++full;
    remaining &= ~comp;
  }
  return full;
}

bool mask_connected(const std::vector<uint64_t>& adj, uint64_t sub) {
  if (!sub) return false;
  uint64_t comp = 0;
  uint64_t frontier = sub & -sub;
  while (frontier) {
    comp |= frontier;
    uint64_t nxt = 0;
    uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      nxt |= adj[v];
    }
    frontier = nxt & sub & ~comp;
  }
  return comp == sub;
}

int cutset_size_mask(const std::vector<uint64_t>& adj, int n, uint64_t side) {
  int cut = 0;
  for (int v = 0; v < n; ++v)
    if (side >> v & 1) cut += std::popcount(adj[v] & ~side);
  return cut;
}

// Visits all n-bit masks in increasing popcount, lexicographic within equal
// popcount. Stop early by returning false.
template <typename F>
void for_each_subset_by_popcount(int n, F&& visit) {
  if (!visit(uint64_t{0})) return;
  for (int c = 1; c <= n; ++c) {
    uint64_t m = (uint64_t{1} << c) - 1;
    uint64_t limit = all_mask(n);
    while (true) {
      if (!visit(m)) return;
      if (m == (limit & ~(all_mask(n - c)))) break;  // highest mask of this popcount
      uint64_t u = m & -m;
      uint64_t w = m + u;
      m = w | ((m ^ w) >> (std::countr_zero(u) + 2));
    }
  }
}

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return size_t(b.hash()); }
};

}  // namespace

std::vector<Separator> enum_minimal_separators_bruteforce(const Graph& g, int max_n) {
  check_scale(g, max_n, "enum_minimal_separators_bruteforce");
  auto adj = adjacency_masks(g);
  uint64_t all = all_mask(g.n());
  std::vector<Separator> out;
  for (uint64_t sub = 0;; ++sub) {
    if (count_full_components_mask(adj, all, sub) >= 2) {
      auto sep = is_minimal_separator(g, Bitset::from_mask(g.n(), sub));
      out.push_back(std::move(*sep));
    }
    if (sub == all) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Separator& a, const Separator& b) { return set_less(a.set, b.set); });
  return out;
}

void enum_minimal_separators_delay(const Graph& g, const std::function<bool(const Separator&)>& emit) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::deque<Bitset> queue;

  auto offer = [&](const VertexSet& cand) {
    if (seen.count(cand)) return;
    if (is_minimal_separator(g, cand)) {
      seen.insert(cand);
      queue.push_back(cand);
    }
  };

  for (int v = 0; v < g.n(); ++v) {
    Bitset closed = g.adj(v);
    closed.set(v);
    for (const auto& c : components(g, closed)) offer(neighborhood(g, c));
  }

  while (!queue.empty()) {
    Bitset s = queue.front();
    queue.pop_front();
    if (!emit(*is_minimal_separator(g, s))) return;
    for (int x = s.first(); x != -1; x = s.next(x)) {
      Bitset removed = s | g.adj(x);
      for (const auto& c : components(g, removed)) offer(neighborhood(g, c));
    }
  }
}

std::vector<Separator> enum_minimal_separators_delay(const Graph& g) {
  std::vector<Separator> out;
  enum_minimal_separators_delay(g, [&](const Separator& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::optional<std::pair<Separator, int64_t>>
max_minimal_separator_bruteforce(const Graph& g, bool weighted, int max_n) {
  check_scale(g, max_n, "max_minimal_separator_bruteforce");
  auto adj = adjacency_masks(g);
  uint64_t all = all_mask(g.n());

  auto value_of_mask = [&](uint64_t sub) -> int64_t {
    if (!weighted) return std::popcount(sub);
    int64_t w = 0;
    uint64_t m = sub;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      w += g.weight(v);
    }
    return w;
  };

  // A minimal separator leaves two nonempty full components, so its value is
  // at most the total minus the two cheapest vertices.
  int64_t upper = 0;
  if (g.n() >= 2) {
    std::vector<int64_t> ws;
    for (int v = 0; v < g.n(); ++v) ws.push_back(weighted ? g.weight(v) : 1);
    std::sort(ws.begin(), ws.end());
    int64_t total = 0;
    for (int64_t w : ws) total += w;
    upper = total - ws[0] - ws[1];
  }

  std::optional<uint64_t> best_mask;
  int64_t best_value = -1;
  for_each_subset_by_popcount(g.n(), [&](uint64_t sub) {
    if (count_full_components_mask(adj, all, sub) >= 2) {
      int64_t value = value_of_mask(sub);
      if (value > best_value) {
        best_value = value;
        best_mask = sub;
        if (best_value >= upper) return false;
      }
    }
    return true;
  });
  if (!best_mask) return std::nullopt;
  auto sep = is_minimal_separator(g, Bitset::from_mask(g.n(), *best_mask));
  return std::make_pair(std::move(*sep), best_value);
}

std::optional<Cut> max_connected_cut_bruteforce(const Graph& g, bool require_nontrivial, int max_n) {
  check_scale(g, max_n, "max_connected_cut_bruteforce");
  if (!is_connected(g)) throw ContractError("max_connected_cut_bruteforce: graph must be connected");
  auto adj = adjacency_masks(g);
  uint64_t all = all_mask(g.n());
  if (g.n() < 2) return std::nullopt;

  std::optional<Cut> best;
  // vertex 0 always on side a; masks enumerate the rest
  uint64_t free_mask = all & ~uint64_t{1};
  for (uint64_t pick = 0;; pick = (pick - free_mask) & free_mask) {
    uint64_t side = pick | 1;
    uint64_t other = all & ~side;
    if (other && mask_connected(adj, side) && mask_connected(adj, other)) {
      bool nontrivial = std::popcount(side) >= 2 && std::popcount(other) >= 2;
      if (!require_nontrivial || nontrivial) {
        int size = cutset_size_mask(adj, g.n(), side);
        if (!best || size > best->cutset_size) {
          best = Cut{Bitset::from_mask(g.n(), side), Bitset::from_mask(g.n(), other), size, true,
                     nontrivial};
        }
      }
    }
    if (pick == free_mask) break;
  }
  return best;
}

VertexSet min_independent_dominating_set_bruteforce(const Graph& g, int max_n) {
  check_scale(g, max_n, "min_independent_dominating_set_bruteforce");
  auto adj = adjacency_masks(g);
  uint64_t all = all_mask(g.n());
  std::optional<uint64_t> found;
  for_each_subset_by_popcount(g.n(), [&](uint64_t sub) {
    uint64_t closed = sub;
    uint64_t m = sub;
    bool independent = true;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (adj[v] & sub) {
        independent = false;
        break;
      }
      closed |= adj[v];
    }
    if (independent && closed == all) {
      found = sub;
      return false;
    }
    return true;
  });
  if (!found) throw ContractError("min_independent_dominating_set_bruteforce: no set found (empty graph?)");
  return Bitset::from_mask(g.n(), *found);
}

std::vector<MaximalBiclique> maximal_bicliques_bruteforce(const Graph& g, const VertexSet& side_a,
                                                          const VertexSet& side_b, int max_n) {
  check_scale(g, max_n, "maximal_bicliques_bruteforce");
  if ((side_a & side_b).any() || (side_a | side_b) != g.vertices())
    throw ContractError("maximal_bicliques_bruteforce: sides must partition the vertex set");
  for (auto [u, v] : g.edges())
    if (side_a.test(u) == side_a.test(v))
      throw ContractError("maximal_bicliques_bruteforce: graph is not bipartite w.r.t. the given sides");

  auto adj = adjacency_masks(g);
  uint64_t all = all_mask(g.n());
  uint64_t a_mask = 0, b_mask = 0;
  for (int v = side_a.first(); v != -1; v = side_a.next(v)) a_mask |= uint64_t{1} << v;
  for (int v = side_b.first(); v != -1; v = side_b.next(v)) b_mask |= uint64_t{1} << v;

  auto is_biclique = [&](uint64_t sub) {
    uint64_t in_b = sub & b_mask;
    uint64_t m = sub & a_mask;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if ((in_b & ~adj[v]) != 0) return false;
    }
    return true;
  };

  std::vector<MaximalBiclique> out;
  for (uint64_t sub = 1;; ++sub) {
    if (is_biclique(sub)) {
      bool maximal = true;
      uint64_t outside = all & ~sub;
      while (outside) {
        int v = std::countr_zero(outside);
        outside &= outside - 1;
        uint64_t opposite = (a_mask >> v & 1) ? (sub & b_mask) : (sub & a_mask);
        if ((opposite & ~adj[v]) == 0) {  // v extends the biclique
          maximal = false;
          break;
        }
      }
      if (maximal) {
        bool both = (sub & a_mask) && (sub & b_mask);
        out.push_back({Bitset::from_mask(g.n(), sub), both});
      }
    }
    if (sub == all) break;
  }
  std::sort(out.begin(), out.end(), [](const MaximalBiclique& x, const MaximalBiclique& y) {
    return set_less(x.vertices, y.vertices);
  });
  return out;
}

}  // namespace sepkit
