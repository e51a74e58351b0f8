#include "sepkit/gen.hpp"

#include <algorithm>
#include <set>

namespace sepkit {

Graph gen_path(int n) {
  if (n < 1) throw ContractError("path needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph gen_cycle(int n) {
  if (n < 3) throw ContractError("cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw ContractError("grid needs positive dimensions");
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

Graph gen_complete(int n) {
  if (n < 1) throw ContractError("complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw ContractError("complete bipartite needs both sides nonempty");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph gen_gnp(int n, double p, uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw ContractError("gnp needs n >= 0 and p in [0,1]");
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

Graph gen_random_bipartite(int a, int b, double p, uint64_t seed) {
  if (a < 0 || b < 0 || p < 0.0 || p > 1.0) throw ContractError("bad bipartite parameters");
  Rng rng(seed);
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (rng.unit() < p) g.add_edge(u, a + v);
  return g;
}

Graph gen_random_cubic(int n, uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    throw ContractError("cubic graphs need even n >= 4");
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    // pairing model: 3 points per vertex, random perfect matching of points
    std::vector<int> points(3 * n);
    for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
    for (int i = 3 * n - 1; i > 0; --i)
      std::swap(points[i], points[rng.below(uint64_t(i + 1))]);
    std::set<std::pair<int, int>> edges;
    bool simple = true;
    for (int i = 0; i < 3 * n; i += 2) {
      int u = points[i], v = points[i + 1];
      if (u == v) {
        simple = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!edges.emplace(u, v).second) {
        simple = false;
        break;
      }
    }
    if (!simple) continue;
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
  throw Error("gen_random_cubic: no simple connected pairing found");
}

Graph gen_connected_gnp(int n, double p, uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Graph g = gen_gnp(n, p, rng.next());
    if (is_connected(g)) return g;
  }
  throw Error("gen_connected_gnp: no connected sample found; p too small?");
}

}  // namespace sepkit
