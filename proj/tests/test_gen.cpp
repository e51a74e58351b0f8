#include <doctest.h>

#include "sepkit/gen.hpp"
#include "sepkit/io.hpp"
#include "test_helpers.hpp"

using namespace sepkit;

TEST_CASE("fixed families") {
  CHECK(gen_path(1).n() == 1);
  CHECK(gen_path(5).m() == 4);
  CHECK(gen_cycle(5).m() == 5);
  CHECK(gen_grid(3, 3).n() == 9);
  CHECK(gen_grid(3, 3).m() == 12);
  CHECK(gen_grid(3, 4).m() == 17);
  CHECK(gen_complete(6).m() == 15);
  CHECK(gen_complete_bipartite(2, 3).m() == 6);
  CHECK_THROWS_AS(gen_cycle(2), ContractError);
}

TEST_CASE("gnp endpoints") {
  CHECK(gen_gnp(6, 0.0, 1).m() == 0);
  CHECK(gen_gnp(6, 1.0, 1).m() == 15);
}

TEST_CASE("random cubic graphs") {
  CHECK_THROWS_AS(gen_random_cubic(7, 1), ContractError);
  CHECK_THROWS_AS(gen_random_cubic(2, 1), ContractError);
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    for (int n : {4, 6, 8, 10}) {
      Graph g = gen_random_cubic(n, seed);
      CHECK(g.m() == 3 * n / 2);
      for (int v = 0; v < n; ++v) CHECK(g.degree(v) == 3);
      CHECK(is_connected(g));
    }
  }
}

TEST_CASE("fixed seed reproduces byte-identical output") {
  for (int rep = 0; rep < 3; ++rep) {
    CHECK(serialize_edge_list(gen_gnp(10, 0.4, 99)) == serialize_edge_list(gen_gnp(10, 0.4, 99)));
    CHECK(serialize_edge_list(gen_random_cubic(8, 7)) ==
          serialize_edge_list(gen_random_cubic(8, 7)));
    CHECK(serialize_edge_list(gen_random_bipartite(4, 5, 0.5, 3)) ==
          serialize_edge_list(gen_random_bipartite(4, 5, 0.5, 3)));
  }
  CHECK(serialize_edge_list(gen_gnp(10, 0.4, 99)) != serialize_edge_list(gen_gnp(10, 0.4, 100)));
}

TEST_CASE("connected gnp is connected") {
  Rng rng(4);
  for (int t = 0; t < 10; ++t) CHECK(is_connected(gen_connected_gnp(8, 0.3, rng.next())));
}
