#include <doctest.h>

#include "sepkit/fpt.hpp"
#include "sepkit/gen.hpp"
#include "sepkit/oracle.hpp"
#include "test_helpers.hpp"

using namespace sepkit;
using namespace sepkit::testing;

namespace {

// two K6 sharing the edge {0,1}: the unique minimal separator is {0,1}
Graph glued_k6() {
  Graph g(10);
  auto clique = [&](std::vector<int> vs) {
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        if (!g.has_edge(vs[i], vs[j])) g.add_edge(vs[i], vs[j]);
  };
  clique({0, 1, 2, 3, 4, 5});
  clique({0, 1, 6, 7, 8, 9});
  return g;
}

}  // namespace

TEST_CASE("find_sep fixed traces") {
  Graph c4 = gen_cycle(4);
  auto out = find_sep(c4, Bitset(4), 2, Lineage{}, c4, false);
  auto* large = std::get_if<LargeSeparatorOutcome>(&out);
  REQUIRE(large);
  CHECK(large->separator.set == vs(4, {1, 3}));

  Graph p4 = gen_path(4);
  auto leafy = find_sep(p4, Bitset(4), 3, Lineage{}, p4, false);
  auto* tree = std::get_if<DecompositionOutcome>(&leafy);
  REQUIRE(tree);
  REQUIRE(tree->tree.nodes.size() == 1);
  CHECK(tree->tree.nodes[0].is_leaf);
  CHECK(tree->tree.nodes[0].vertices == Bitset::full(4));
}

TEST_CASE("extract_large_separator hand trace") {
  Graph c4 = gen_cycle(4);
  VertexSet s0 = vs(4, {1, 3}), c0 = vs(4, {0});
  Graph g1 = saturate(c4, c0, s0);  // triangle on {0,1,3} with fill {1,3}
  auto step = std::make_shared<LineageStep>(LineageStep{c4, s0, c0});
  Lineage lin = Lineage{}.extend(step);

  Separator sep = extract_large_separator(lin, g1, vs(4, {0, 1, 3}), c4, 2, false);
  CHECK(sep.set == vs(4, {0, 2}));
  CHECK(sep.size() == 2);

  // a set that is already a clique in the original graph is rejected
  CHECK_THROWS_AS(extract_large_separator(lin, g1, vs(4, {0, 1}), c4, 1, false), ContractError);

  // C5 chain where the candidate is not a clique in the final graph
  Graph c5 = gen_cycle(5);
  VertexSet s5 = vs(5, {1, 4}), comp5 = vs(5, {2, 3});
  Graph h5 = saturate(c5, comp5, s5);
  auto step5 = std::make_shared<LineageStep>(LineageStep{c5, s5, comp5});
  CHECK_THROWS_AS(
      extract_large_separator(Lineage{}.extend(step5), h5, vs(5, {1, 2, 3, 4}), c5, 2, false),
      ContractError);
}

TEST_CASE("solve fixed instances") {
  CHECK(solve(gen_grid(3, 3), 3).decision);
  CHECK(!solve(gen_grid(3, 3), 4).decision);

  for (int k = 0; k <= 5; ++k) CHECK(!solve(gen_complete(5), k).decision);

  // two disjoint C4: a separator lives inside one component
  Graph two(8);
  for (int v = 0; v < 4; ++v) two.add_edge(v, (v + 1) % 4);
  for (int v = 0; v < 4; ++v) two.add_edge(4 + v, 4 + (v + 1) % 4);
  auto res = solve(two, 2);
  REQUIRE(res.decision);
  REQUIRE(res.certificate);
  CHECK(res.certificate->set.count() == 2);
  CHECK(is_minimal_separator(two, res.certificate->set));

  // k = 0 asks for any minimal separator at all
  CHECK(solve(gen_path(3), 0).decision);
  CHECK(!solve(gen_complete(3), 0).decision);
  Graph isolated(2);
  auto empty_sep = solve(isolated, 0);
  REQUIRE(empty_sep.decision);
  CHECK(empty_sep.certificate->set.none());
  CHECK(!solve(isolated, 1).decision);
  CHECK(!solve(Graph(0), 0).decision);
}

TEST_CASE("clique split path") {
  Graph g = glued_k6();
  auto yes = solve(g, 2);
  REQUIRE(yes.decision);
  CHECK(yes.certificate->set == vs(10, {0, 1}));

  auto no = solve(g, 3);
  CHECK(!no.decision);
  CHECK(no.stats.clique_splits == 1);
  CHECK(no.stats.clique_splits <= g.n());
}

TEST_CASE("solve matches the oracle on random graphs") {
  Rng rng(31);
  int graphs = 0;
  while (graphs < 40) {
    int n = 4 + int(rng.below(6));
    Graph g = gen_gnp(n, 0.2 + 0.5 * rng.unit(), rng.next());
    if (!is_connected(g)) continue;
    ++graphs;
    auto oracle = max_minimal_separator_bruteforce(g);
    for (int k = 0; k <= n; ++k) {
      SolveResult res = solve(g, k);
      bool expected = oracle && oracle->second >= k;
      CHECK(res.decision == expected);
      if (res.decision) {
        REQUIRE(res.certificate);
        auto recert = is_minimal_separator(g, res.certificate->set);
        REQUIRE(recert);
        CHECK(res.certificate->set.count() >= k);
      }
      CHECK(res.stats.clique_splits <= g.n());
    }
  }
}

TEST_CASE("weighted solve matches the weighted oracle") {
  Rng rng(77);
  int graphs = 0;
  while (graphs < 12) {
    int n = 4 + int(rng.below(4));
    Graph g = gen_gnp(n, 0.3 + 0.4 * rng.unit(), rng.next());
    if (!is_connected(g)) continue;
    ++graphs;
    for (int v = 0; v < n; ++v) g.set_weight(v, 1 + int64_t(rng.below(5)));
    auto oracle = max_minimal_separator_bruteforce(g, true);
    int64_t top = g.total_weight();
    for (int64_t k = 0; k <= top; ++k) {
      SolveResult res = solve(g, k, true);
      bool expected = oracle && oracle->second >= k;
      CHECK(res.decision == expected);
      if (res.decision) CHECK(res.certificate->weight(g) >= k);
    }
  }
}

TEST_CASE("lineage sharing") {
  Graph c4 = gen_cycle(4);
  auto step1 = std::make_shared<LineageStep>(LineageStep{c4, vs(4, {1, 3}), vs(4, {0})});
  auto step2 = std::make_shared<LineageStep>(LineageStep{c4, vs(4, {1, 3}), vs(4, {2})});
  Lineage base;
  Lineage a = base.extend(step1);
  Lineage b = a.extend(step2);
  CHECK(base.empty());
  CHECK(a.steps().size() == 1);
  CHECK(b.steps().size() == 2);
  CHECK(&b.last() == step2.get());
  CHECK(b.steps()[0] == step1);
}
