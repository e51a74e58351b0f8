#include <doctest.h>

#include "sepkit/gen.hpp"
#include "sepkit/oracle.hpp"
#include "sepkit/reductions.hpp"
#include "test_helpers.hpp"

using namespace sepkit;
using namespace sepkit::testing;

namespace {

Graph prism() {  // C3 x K2
  Graph g(6);
  for (int v = 0; v < 3; ++v) {
    g.add_edge(v, (v + 1) % 3);
    g.add_edge(3 + v, 3 + (v + 1) % 3);
    g.add_edge(v, 3 + v);
  }
  return g;
}

Graph cube_q3() {
  Graph g(8);
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (!(v & (1 << bit))) g.add_edge(v, v | (1 << bit));
  return g;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = g.adj(u).first(); v != -1; v = g.adj(u).next(v)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_claw(const Graph& g) {
  for (int w = 0; w < g.n(); ++w) {
    auto nb = g.adj(w).members();
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        for (size_t l = j + 1; l < nb.size(); ++l)
          if (!g.has_edge(nb[i], nb[j]) && !g.has_edge(nb[i], nb[l]) &&
              !g.has_edge(nb[j], nb[l]))
            return true;
  }
  return false;
}

}  // namespace

TEST_CASE("subdivision construction and verification") {
  Graph k4 = gen_complete(4);
  auto cert = subdivide_cubic(k4);
  CHECK(cert.target.n() == 10);
  CHECK(cert.target.m() == 12);
  CHECK(is_bipartite(cert.target));
  for (int v = 0; v < cert.target.n(); ++v) CHECK(cert.target.degree(v) <= 3);

  auto report = verify_reduction(cert);
  CHECK(report.pass);
  CHECK(report.source_value == 4);
  CHECK(report.target_value == 4);

  CHECK(verify_reduction(subdivide_cubic(gen_complete_bipartite(3, 3))).pass);
  CHECK(verify_reduction(subdivide_cubic(prism())).pass);
  CHECK(subdivide_cubic(prism()).target.n() == 15);  // n + m

  CHECK_THROWS_AS(subdivide_cubic(gen_cycle(5)), ContractError);
  Graph disconnected(8);
  CHECK_THROWS_AS(subdivide_cubic(disconnected), ContractError);
}

TEST_CASE("subdivision maps") {
  Graph k4 = gen_complete(4);
  auto cert = subdivide_cubic(k4);

  auto best = max_connected_cut_bruteforce(k4, false);
  REQUIRE(best);
  VertexSet sep = subdivision_forward(cert, *best);
  auto certified = is_minimal_separator(cert.target, sep);
  REQUIRE(certified);
  CHECK(sep.count() == best->cutset_size);

  // every minimal separator of the target reads back as a connected cut of
  // at least its size
  for (const auto& s : enum_minimal_separators_bruteforce(cert.target)) {
    Cut cut = subdivision_backward(cert, s.set);
    CHECK(cut.connected);
    CHECK(cut.cutset_size >= s.set.count());
  }

  // the endpoints of one source edge form a size-2 separator whose exchange
  // gets stuck; the fallback leaf cut has size 3
  VertexSet endpoints = vs(10, {0, 1});
  REQUIRE(is_minimal_separator(cert.target, endpoints));
  Cut fallback = subdivision_backward(cert, endpoints);
  CHECK(fallback.cutset_size == 3);
}

TEST_CASE("cobipartite reduction on cycles") {
  Graph c6 = gen_cycle(6);
  VertexSet a = vs(6, {0, 2, 4}), b = vs(6, {1, 3, 5});
  auto cert = cobipartite_reduction(c6, a, b);
  const auto& data = std::get<CobipartiteData>(cert.data);
  CHECK(data.reduced.n() == 6);
  CHECK(cert.target.m() == 3 + 3 + 6);  // two triangles plus the cycle edges
  CHECK(is_clique(cert.target, data.side_a));
  CHECK(is_clique(cert.target, data.side_b));

  auto report = verify_reduction(cert);
  CHECK(report.pass);
  CHECK(report.source_value == 2);   // minimum maximal independent set
  CHECK(report.target_value == 4);   // 6 - 2

  Graph c8 = gen_cycle(8);
  VertexSet a8(8), b8(8);
  for (int v = 0; v < 8; ++v) (v % 2 ? b8 : a8).set(v);
  auto r8 = verify_reduction(cobipartite_reduction(c8, a8, b8));
  CHECK(r8.pass);
  CHECK(*r8.target_value == 8 - *r8.source_value);
}

TEST_CASE("cobipartite preprocessing") {
  // vertex 6 sees the whole other side, so it is isolated in the bipartite
  // complement and gets dropped; equality holds on the reduced instance
  Graph g(7);
  for (int v = 0; v < 6; ++v) g.add_edge(v, (v + 1) % 6);
  g.add_edge(6, 1);
  g.add_edge(6, 3);
  g.add_edge(6, 5);
  VertexSet a = vs(7, {0, 2, 4, 6}), b = vs(7, {1, 3, 5});
  auto cert = cobipartite_reduction(g, a, b);
  const auto& data = std::get<CobipartiteData>(cert.data);
  CHECK(data.reduced.n() == 6);
  CHECK(data.removed_irrelevant == std::vector<int>{6});
  CHECK(verify_reduction(cert).pass);

  // an isolated vertex is forced into every maximal independent set
  Graph iso(7);
  for (int v = 0; v < 6; ++v) iso.add_edge(v, (v + 1) % 6);  // C6 plus isolated 6
  auto cert2 = cobipartite_reduction(iso, vs(7, {0, 2, 4, 6}), vs(7, {1, 3, 5}));
  const auto& data2 = std::get<CobipartiteData>(cert2.data);
  CHECK(data2.removed_forced == std::vector<int>{6});
  CHECK(data2.reduced.n() == 6);
  CHECK(verify_reduction(cert2).pass);

  CHECK_THROWS_AS(cobipartite_reduction(gen_cycle(3), vs(3, {0}), vs(3, {1, 2})), ContractError);
  // complete bipartite collapses entirely
  CHECK_THROWS_AS(cobipartite_reduction(gen_complete_bipartite(2, 2), vs(4, {0, 1}), vs(4, {2, 3})),
                  Error);
}

TEST_CASE("cobipartite maps") {
  Graph c6 = gen_cycle(6);
  auto cert = cobipartite_reduction(c6, vs(6, {0, 2, 4}), vs(6, {1, 3, 5}));
  const auto& data = std::get<CobipartiteData>(cert.data);

  VertexSet ids = min_independent_dominating_set_bruteforce(data.reduced);
  REQUIRE((ids & data.side_a).any());
  REQUIRE((ids & data.side_b).any());
  VertexSet sep = cobipartite_forward(cert, ids);
  REQUIRE(is_minimal_separator(cert.target, sep));
  CHECK(sep.count() == 6 - ids.count());
  CHECK(cobipartite_backward(cert, sep) == ids);

  CHECK_THROWS_AS(cobipartite_forward(cert, vs(6, {0, 2, 4})), ContractError);  // one-sided
}

TEST_CASE("line graph construction") {
  auto [lc4, map4] = line_graph(gen_cycle(4));
  CHECK(lc4.n() == 4);
  CHECK(lc4.m() == 4);  // line graph of a cycle is the cycle

  auto [lk13, _] = line_graph(gen_complete_bipartite(1, 3));
  CHECK(lk13.n() == 3);
  CHECK(is_clique(lk13, lk13.vertices()));  // star becomes a triangle

  auto [lp4, __] = line_graph(gen_path(4));
  CHECK(lp4.n() == 3);
  CHECK(lp4.m() == 2);  // P4 becomes P3

  CHECK_THROWS_AS(line_graph(Graph(3)), ContractError);
}

TEST_CASE("linegraph reduction") {
  auto c4 = verify_reduction(linegraph_reduction(gen_cycle(4)));
  CHECK(c4.pass);
  CHECK(c4.source_value == 2);
  CHECK(c4.target_value == 2);

  auto k4 = verify_reduction(linegraph_reduction(gen_complete(4)));
  CHECK(k4.pass);
  CHECK(k4.source_value == 4);

  // P2 gains two pendants; nothing of size 2 exists on either side
  auto p2 = verify_reduction(linegraph_reduction(gen_path(2)));
  CHECK(p2.pass);
  CHECK(*p2.source_value <= 1);
  CHECK(*p2.target_value <= 1);

  CHECK_THROWS_AS(linegraph_reduction(Graph(3)), ContractError);

  for (const Graph& g : {gen_cycle(4), gen_path(5), gen_complete(4)}) {
    auto cert = linegraph_reduction(g);
    CHECK(!has_claw(cert.target));
    const auto& data = std::get<LineGraphData>(cert.data);
    CHECK(data.pendant_graph.n() == 2 * g.n());
    CHECK(data.pendant_graph.label(g.n()) == "pendant(0)");
  }
}

TEST_CASE("linegraph maps") {
  Graph c4 = gen_cycle(4);
  auto cert = linegraph_reduction(c4);
  const auto& data = std::get<LineGraphData>(cert.data);

  auto cut = max_connected_cut_bruteforce(data.pendant_graph, true);
  REQUIRE(cut);
  VertexSet sep = linegraph_forward(cert, *cut);
  REQUIRE(is_minimal_separator(cert.target, sep));
  CHECK(sep.count() == cut->cutset_size);

  for (const auto& s : enum_minimal_separators_bruteforce(cert.target)) {
    Cut back = linegraph_backward(cert, s.set);
    CHECK(back.connected);
    CHECK(back.nontrivial);
    CHECK(back.cutset_size == s.set.count());
  }
}

TEST_CASE("universal composition") {
  auto two_c4 = verify_reduction(compose_universal({gen_cycle(4), gen_cycle(4)}));
  CHECK(two_c4.pass);
  CHECK(two_c4.target_value == 3);  // 2 + 1

  auto lone_k3 = verify_reduction(compose_universal({gen_complete(3)}));
  CHECK(lone_k3.pass);
  CHECK(!lone_k3.target_value);  // K4 has no minimal separator

  auto mixed = verify_reduction(compose_universal({gen_path(3), gen_complete(5)}));
  CHECK(mixed.pass);
  CHECK(mixed.target_value == 2);  // 1 + 1 from the middle of P3

  // both parts complete: {r} is the only separator, threshold map holds for
  // every k >= 1
  auto k3k3 = verify_reduction(compose_universal({gen_complete(3), gen_complete(3)}));
  CHECK(k3k3.pass);
  CHECK(k3k3.target_value == 1);

  CHECK_THROWS_AS(compose_universal({}), ContractError);
}

TEST_CASE("composition maps") {
  auto cert = compose_universal({gen_path(3), gen_complete(5)});
  Separator mid = *is_minimal_separator(gen_path(3), vs(3, {1}));
  VertexSet lifted = composition_forward(cert, 0, mid.set);
  REQUIRE(is_minimal_separator(cert.target, lifted));
  CHECK(lifted.count() == 2);
  auto [part, local] = composition_backward(cert, lifted);
  CHECK(part == 0);
  CHECK(local == vs(3, {1}));

  // {r} alone localizes only when a part is disconnected
  auto solid = compose_universal({gen_complete(3), gen_complete(3)});
  VertexSet just_r = vs(solid.target.n(), {solid.target.n() - 1});
  REQUIRE(is_minimal_separator(solid.target, just_r));
  CHECK_THROWS_AS(composition_backward(solid, just_r), Error);

  Graph twoedges = from_edges(4, {{0, 1}, {2, 3}});
  auto loose = compose_universal({twoedges, gen_complete(3)});
  VertexSet r2 = vs(loose.target.n(), {loose.target.n() - 1});
  auto [p2, l2] = composition_backward(loose, r2);
  CHECK(p2 == 0);
  CHECK(l2.none());
}

TEST_CASE("oracle optimum is monotone under composition") {
  Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = gen_connected_gnp(4 + int(rng.below(4)), 0.5, rng.next());
    auto single = max_minimal_separator_bruteforce(g);
    auto cert = compose_universal({g, gen_complete(3)});
    auto composed = max_minimal_separator_bruteforce(cert.target);
    if (single) {
      REQUIRE(composed);
      CHECK(composed->second == single->second + 1);
    }
  }
}

TEST_CASE("corrupted certificate fails verification") {
  Graph k4 = gen_complete(4);
  auto cert = subdivide_cubic(k4);
  int64_t honest = verify_reduction(cert).target_value.value();

  bool found = false;
  for (auto [u, v] : cert.target.edges()) {
    Graph corrupted(cert.target.n());
    for (auto [x, y] : cert.target.edges())
      if (!(x == u && y == v)) corrupted.add_edge(x, y);
    auto broken = max_minimal_separator_bruteforce(corrupted);
    if (broken && broken->second == honest) continue;
    ReductionCertificate bad = cert;
    bad.target = corrupted;
    auto report = verify_reduction(bad);
    CHECK(!report.pass);
    CHECK(report.first_violation.has_value());
    found = true;
    break;
  }
  CHECK(found);
}
