#include <doctest.h>

#include "sepkit/gen.hpp"
#include "sepkit/oracle.hpp"
#include "sepkit/td.hpp"
#include "test_helpers.hpp"

using namespace sepkit;
using namespace sepkit::testing;

namespace {

TreeDecomposition single_bag(const Graph& g) {
  TreeDecomposition td;
  td.bags.push_back(g.vertices());
  return td;
}

// sliding windows of consecutive ids wide enough to cover every edge
TreeDecomposition interval_decomposition(const Graph& g) {
  int span = 1;
  for (auto [u, v] : g.edges()) span = std::max(span, v - u + 1);
  TreeDecomposition td;
  if (g.n() == 0) return td;
  int width = std::min(span, g.n());
  for (int lo = 0; lo + width <= g.n(); ++lo) {
    Bitset bag(g.n());
    for (int v = lo; v < lo + width; ++v) bag.set(v);
    td.bags.push_back(bag);
    if (lo > 0) td.edges.emplace_back(lo - 1, lo);
  }
  return td;
}

}  // namespace

TEST_CASE("validate_td") {
  Graph p3 = gen_path(3);
  TreeDecomposition good;
  good.bags = {vs(3, {0, 1}), vs(3, {1, 2})};
  good.edges = {{0, 1}};
  CHECK(validate_td(p3, good));
  CHECK(good.width() == 1);

  TreeDecomposition bad;
  bad.bags = {vs(3, {0}), vs(3, {1, 2})};
  bad.edges = {{0, 1}};
  CHECK(!validate_td(p3, bad));  // edge {0,1} uncovered

  CHECK(validate_td(gen_cycle(5), single_bag(gen_cycle(5))));
  CHECK(single_bag(gen_cycle(5)).width() == 4);

  // broken subtree property
  TreeDecomposition split;
  split.bags = {vs(3, {0, 1}), vs(3, {1, 2}), vs(3, {0, 2})};
  split.edges = {{0, 1}, {1, 2}};
  CHECK(!split.bags.empty());
  CHECK(!validate_td(gen_path(3), split));

  // not a tree
  TreeDecomposition cyc;
  cyc.bags = {vs(3, {0, 1}), vs(3, {1, 2}), vs(3, {1})};
  cyc.edges = {{0, 1}, {1, 2}, {2, 0}};
  CHECK(!validate_td(p3, cyc));
}

TEST_CASE("assemble_td from recursion outcomes") {
  // C6 with k=3 splits once on {1,5} and leaves two leaf bags
  Graph c6 = gen_cycle(6);
  auto out = find_sep(c6, Bitset(6), 3, Lineage{}, c6, false);
  auto* tree = std::get_if<DecompositionOutcome>(&out);
  REQUIRE(tree);
  TreeDecomposition td = assemble_td(tree->tree);
  CHECK(validate_td(c6, td));
  CHECK(td.width() == 4);  // 2k-2
  CHECK(as_member_sets(td.bags) ==
        std::set<std::vector<int>>{{1, 5}, {0, 1, 5}, {1, 2, 3, 4, 5}});

  // a single case-1 leaf
  Graph c4 = gen_cycle(4);
  auto small = find_sep(c4, Bitset(4), 3, Lineage{}, c4, false);
  TreeDecomposition td2 = assemble_td(std::get<DecompositionOutcome>(small).tree);
  CHECK(td2.bags.size() == 1);
  CHECK(validate_td(c4, td2));
}

TEST_CASE("dp on fixed instances") {
  Graph c4 = gen_cycle(4);
  auto best = max_minimal_separator_dp(c4, single_bag(c4));
  REQUIRE(best);
  CHECK(best->second == 2);
  CHECK((best->first.set == vs(4, {0, 2}) || best->first.set == vs(4, {1, 3})));

  CHECK(!max_minimal_separator_dp(gen_complete(4), single_bag(gen_complete(4))));

  // 3x3 grid with a width-3 interval decomposition
  Graph grid = gen_grid(3, 3);
  TreeDecomposition td = interval_decomposition(grid);
  REQUIRE(validate_td(grid, td));
  CHECK(td.width() == 3);
  auto g3 = max_minimal_separator_dp(grid, td);
  REQUIRE(g3);
  CHECK(g3->second == 3);

  TreeDecomposition junk;
  junk.bags = {vs(9, {0})};
  CHECK_THROWS_AS(max_minimal_separator_dp(grid, junk), ContractError);
}

TEST_CASE("dp agrees with the oracle and is decomposition invariant") {
  Rng rng(13);
  int done = 0;
  while (done < 35) {
    int n = 3 + int(rng.below(7));
    Graph g = gen_gnp(n, 0.15 + 0.6 * rng.unit(), rng.next());
    ++done;
    auto oracle = max_minimal_separator_bruteforce(g);
    for (const auto& td : {single_bag(g), interval_decomposition(g)}) {
      REQUIRE(validate_td(g, td));
      auto dp = max_minimal_separator_dp(g, td);
      CHECK(dp.has_value() == oracle.has_value());
      if (dp) {
        CHECK(dp->second == oracle->second);
        CHECK(is_minimal_separator(g, dp->first.set));
      }
    }
  }
}

TEST_CASE("weighted dp") {
  Rng rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 3 + int(rng.below(6));
    Graph g = gen_gnp(n, 0.4, rng.next());
    for (int v = 0; v < n; ++v) g.set_weight(v, 1 + int64_t(rng.below(5)));
    auto oracle = max_minimal_separator_bruteforce(g, true);
    auto dp = max_minimal_separator_dp(g, interval_decomposition(g), true);
    CHECK(dp.has_value() == oracle.has_value());
    if (dp) CHECK(dp->second == oracle->second);
  }
}

TEST_CASE("pace serialization round trip") {
  Graph grid = gen_grid(3, 3);
  TreeDecomposition td = interval_decomposition(grid);
  std::string text = serialize_td_pace(td, grid.n());
  CHECK(text.rfind("s td 6 4 9", 0) == 0);
  TreeDecomposition back = parse_td_pace(text);
  CHECK(back.bags.size() == td.bags.size());
  CHECK(back.width() == td.width());
  CHECK(validate_td(grid, back));
  CHECK(as_member_sets(back.bags) == as_member_sets(td.bags));
}
