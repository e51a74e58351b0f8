#pragma once

#include <doctest.h>

#include <set>
#include <vector>

#include "sepkit/gen.hpp"
#include "sepkit/graph.hpp"

namespace sepkit::testing {

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline VertexSet vs(int n, std::initializer_list<int> bits) { return Bitset::of(n, bits); }

inline std::set<std::vector<int>> as_member_sets(const std::vector<VertexSet>& sets) {
  std::set<std::vector<int>> out;
  for (const auto& s : sets) out.insert(s.members());
  return out;
}

inline std::set<std::vector<int>> separator_sets(const std::vector<Separator>& seps) {
  std::set<std::vector<int>> out;
  for (const auto& s : seps) out.insert(s.set.members());
  return out;
}

}  // namespace sepkit::testing
