#include "sepkit/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "sepkit/oracle.hpp"

namespace sepkit {

std::string reduction_kind_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::Subdivision: return "subdivision";
    case ReductionKind::Cobipartite: return "cobipartite";
    case ReductionKind::LineGraph: return "linegraph";
    case ReductionKind::Composition: return "composition";
  }
  return "?";
}

namespace {

std::string vertex_name(const Graph& g, int v) {
  std::string l = g.label(v);
  return l.empty() ? std::to_string(v) : l;
}

void require_partition(const Graph& g, const VertexSet& a, const VertexSet& b, const char* op) {
  if ((a & b).any() || (a | b) != g.vertices())
    throw ContractError(std::string(op) + ": sides must partition the vertex set");
  for (auto [u, v] : g.edges())
    if (a.test(u) == a.test(v))
      throw ContractError(std::string(op) + ": graph is not bipartite w.r.t. the given sides");
}

Cut make_cut(const Graph& g, const VertexSet& side_a) {
  VertexSet side_b = g.vertices() - side_a;
  if (side_a.none() || side_b.none()) throw ContractError("cut sides must be nonempty");
  int crossing = 0;
  for (int v = side_a.first(); v != -1; v = side_a.next(v))
    crossing += (g.adj(v) & side_b).count();
  bool conn = components(g, side_b).size() == 1 && components(g, side_a).size() == 1;
  return Cut{side_a, side_b, crossing,
             conn, side_a.count() >= 2 && side_b.count() >= 2};
}

void require_connected_cut(const Graph& g, const Cut& cut, bool nontrivial, const char* op) {
  if (cut.side_a.universe() != g.n() || (cut.side_a & cut.side_b).any() ||
      (cut.side_a | cut.side_b) != g.vertices())
    throw ContractError(std::string(op) + ": cut does not partition the vertex set");
  Cut checked = make_cut(g, cut.side_a);
  if (!checked.connected) throw ContractError(std::string(op) + ": cut sides are not connected");
  if (nontrivial && !checked.nontrivial)
    throw ContractError(std::string(op) + ": cut must be non-trivial");
}

}  // namespace

// ---------------------------------------------------------------------------
// subdivision
// ---------------------------------------------------------------------------

ReductionCertificate subdivide_cubic(const Graph& g) {
  if (!is_connected(g)) throw ContractError("subdivide_cubic: graph must be connected");
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 3) throw ContractError("subdivide_cubic: graph is not cubic");

  auto edges = g.edges();
  Graph target(g.n() + int(edges.size()));
  SubdivisionData data;
  for (int v = 0; v < g.n(); ++v) target.set_label(v, vertex_name(g, v));
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    int ve = g.n() + int(i);
    target.add_edge(u, ve);
    target.add_edge(ve, v);
    target.set_label(ve, "e(" + vertex_name(g, u) + "," + vertex_name(g, v) + ")");
    data.edge_vertices.push_back({u, v, ve});
  }
  return ReductionCertificate{ReductionKind::Subdivision, g, std::move(target),
                              ThresholdMap{"identity"}, std::move(data)};
}

VertexSet subdivision_forward(const ReductionCertificate& cert, const Cut& cut) {
  const auto& data = std::get<SubdivisionData>(cert.data);
  require_connected_cut(cert.source, cut, false, "subdivision_forward");
  Bitset out(cert.target.n());
  for (const auto& [u, v, ve] : data.edge_vertices)
    if (cut.side_a.test(u) != cut.side_a.test(v)) out.set(ve);
  return out;
}

Cut subdivision_backward(const ReductionCertificate& cert, const VertexSet& separator) {
  const Graph& src = cert.source;
  const Graph& tgt = cert.target;
  if (!is_minimal_separator(tgt, separator))
    throw ContractError("subdivision_backward: not a minimal separator of the target");

  Bitset u_set = separator;
  while (true) {
    int v = -1;
    for (int x = u_set.first(); x != -1; x = u_set.next(x))
      if (x < src.n()) {
        v = x;
        break;
      }
    if (v == -1) break;

    // v is an original vertex; swap it for the unique subdivision neighbor in
    // a full component where it has exactly one neighbor
    auto full = full_components(tgt, u_set);
    int swap_target = -1;
    bool singleton_only = true;
    for (const auto& c : full) {
      Bitset nb = tgt.adj(v) & c;
      if (nb.count() != 1) continue;
      if (c.count() >= 2) {
        swap_target = nb.first();
        singleton_only = false;
        break;
      }
      if (swap_target == -1) swap_target = nb.first();
    }
    if (swap_target == -1)
      throw Error("subdivision_backward: exchange found no one-neighbor full component");
    if (singleton_only) {
      // a singleton full component {v_e} pins u_set to the two endpoints of
      // one edge, so |U| = 2; any leaf cut of a cubic graph has size 3 >= 2
      if (u_set.count() != 2)
        throw Error("subdivision_backward: stuck exchange on a separator larger than 2");
      for (int w = 0; w < src.n(); ++w) {
        Bitset single(src.n());
        single.set(w);
        if (components(src, single).size() == 1) return make_cut(src, single);
      }
      throw Error("subdivision_backward: no leaf cut found");
    }
    u_set.reset(v);
    u_set.set(swap_target);
    if (!is_minimal_separator(tgt, u_set))
      throw Error("subdivision_backward: exchange broke minimality");
  }

  auto comps = components(tgt, u_set);
  if (comps.size() != 2)
    throw Error("subdivision_backward: expected exactly two components");
  Bitset side_a(src.n());
  for (int x = comps[0].first(); x != -1; x = comps[0].next(x))
    if (x < src.n()) side_a.set(x);
  Cut cut = make_cut(src, side_a);
  if (!cut.connected || cut.cutset_size != u_set.count())
    throw Error("subdivision_backward: reconstructed cut failed its checks");
  return cut;
}

// ---------------------------------------------------------------------------
// co-bipartite
// ---------------------------------------------------------------------------

ReductionCertificate cobipartite_reduction(const Graph& g, const VertexSet& side_a,
                                           const VertexSet& side_b) {
  require_partition(g, side_a, side_b, "cobipartite_reduction");

  Bitset keep = g.vertices();
  std::vector<int> forced, irrelevant;
  while (true) {
    int victim = -1;
    bool is_forced = false;
    for (int v = keep.first(); v != -1; v = keep.next(v)) {
      Bitset other = (side_a.test(v) ? side_b : side_a) & keep;
      Bitset nb = g.adj(v) & keep;
      if (nb.none()) {
        victim = v;
        is_forced = true;  // isolated: joins every maximal independent set
        break;
      }
      if (other.any() && other.is_subset_of(nb)) {
        victim = v;  // sees the whole other side: irrelevant after complement
        break;
      }
    }
    if (victim == -1) break;
    keep.reset(victim);
    (is_forced ? forced : irrelevant).push_back(victim);
  }

  Graph reduced = g.induced_subgraph(keep);
  Bitset a_local(reduced.n()), b_local(reduced.n());
  for (int v = 0; v < reduced.n(); ++v)
    (side_a.test(reduced.origin_of(v)) ? a_local : b_local).set(v);
  if (a_local.none() || b_local.none())
    throw Error("cobipartite_reduction: degenerate instance, a side vanished in preprocessing");

  Graph target(reduced.n());
  for (int v = 0; v < reduced.n(); ++v) target.set_label(v, vertex_name(g, reduced.origin_of(v)));
  auto complete = [&](const Bitset& side) {
    for (int u = side.first(); u != -1; u = side.next(u))
      for (int v = side.next(u); v != -1; v = side.next(v)) target.add_edge(u, v);
  };
  complete(a_local);
  complete(b_local);
  // cross edges of the target = cross edges of the reduced source (double
  // complement brings them back)
  for (auto [u, v] : reduced.edges()) target.add_edge(u, v);

  return ReductionCertificate{
      ReductionKind::Cobipartite, g, std::move(target),
      ThresholdMap{"complement_flip", reduced.n(), 0},
      CobipartiteData{std::move(reduced), a_local, b_local, std::move(forced), std::move(irrelevant)}};
}

namespace {

void require_maximal_ind_set(const Graph& g, const VertexSet& u, const char* op) {
  for (int v = u.first(); v != -1; v = u.next(v))
    if ((g.adj(v) & u).any()) throw ContractError(std::string(op) + ": set is not independent");
  for (int v = 0; v < g.n(); ++v)
    if (!u.test(v) && !(g.adj(v) & u).any())
      throw ContractError(std::string(op) + ": set is not maximal");
}

}  // namespace

VertexSet cobipartite_forward(const ReductionCertificate& cert, const VertexSet& max_ind_set) {
  const auto& data = std::get<CobipartiteData>(cert.data);
  require_maximal_ind_set(data.reduced, max_ind_set, "cobipartite_forward");
  if (!(max_ind_set & data.side_a).any() || !(max_ind_set & data.side_b).any())
    throw ContractError("cobipartite_forward: set must hit both sides");
  return data.reduced.vertices() - max_ind_set;
}

VertexSet cobipartite_backward(const ReductionCertificate& cert, const VertexSet& separator) {
  const auto& data = std::get<CobipartiteData>(cert.data);
  if (!is_minimal_separator(cert.target, separator))
    throw ContractError("cobipartite_backward: not a minimal separator of the target");
  VertexSet u = data.reduced.vertices() - separator;
  require_maximal_ind_set(data.reduced, u, "cobipartite_backward");
  return u;
}

// ---------------------------------------------------------------------------
// line graph
// ---------------------------------------------------------------------------

std::pair<Graph, std::vector<std::array<int, 3>>> line_graph(const Graph& g) {
  auto edges = g.edges();
  if (edges.empty()) throw ContractError("line_graph: graph has no edges");
  Graph lg(int(edges.size()));
  std::vector<std::array<int, 3>> map;
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    lg.set_label(int(i), "e(" + vertex_name(g, u) + "," + vertex_name(g, v) + ")");
    map.push_back({u, v, int(i)});
    for (size_t j = i + 1; j < edges.size(); ++j) {
      auto [x, y] = edges[j];
      if (u == x || u == y || v == x || v == y) lg.add_edge(int(i), int(j));
    }
  }
  return {std::move(lg), std::move(map)};
}

ReductionCertificate linegraph_reduction(const Graph& g) {
  if (!is_connected(g)) throw ContractError("linegraph_reduction: graph must be connected");
  if (g.n() < 2) throw ContractError("linegraph_reduction: need at least two vertices");

  Graph plus(2 * g.n());
  LineGraphData data;
  for (int v = 0; v < g.n(); ++v) {
    plus.set_label(v, vertex_name(g, v));
    plus.set_label(g.n() + v, "pendant(" + vertex_name(g, v) + ")");
    data.pendants.push_back({v, g.n() + v});
  }
  for (auto [u, v] : g.edges()) plus.add_edge(u, v);
  for (int v = 0; v < g.n(); ++v) plus.add_edge(v, g.n() + v);

  auto [target, map] = line_graph(plus);
  data.edge_vertices = std::move(map);
  data.pendant_graph = std::move(plus);
  return ReductionCertificate{ReductionKind::LineGraph, g, std::move(target),
                              ThresholdMap{"identity"}, std::move(data)};
}

VertexSet linegraph_forward(const ReductionCertificate& cert, const Cut& pendant_cut) {
  const auto& data = std::get<LineGraphData>(cert.data);
  require_connected_cut(data.pendant_graph, pendant_cut, true, "linegraph_forward");
  Bitset out(cert.target.n());
  for (const auto& [u, v, e] : data.edge_vertices)
    if (pendant_cut.side_a.test(u) != pendant_cut.side_a.test(v)) out.set(e);
  return out;
}

Cut linegraph_backward(const ReductionCertificate& cert, const VertexSet& separator) {
  const auto& data = std::get<LineGraphData>(cert.data);
  const Graph& plus = data.pendant_graph;
  auto sep = is_minimal_separator(cert.target, separator);
  if (!sep) throw ContractError("linegraph_backward: not a minimal separator of the target");

  auto comps = components(cert.target, separator);
  if (comps.size() != 2 || sep->full_components.size() != 2)
    throw Error("linegraph_backward: line graphs leave exactly two full components");

  Bitset side_a(plus.n());
  for (const auto& [u, v, e] : data.edge_vertices)
    if (comps[0].test(e)) {
      side_a.set(u);
      side_a.set(v);
    }
  Cut cut = make_cut(plus, side_a);
  if (!cut.connected || !cut.nontrivial || cut.cutset_size != separator.count())
    throw Error("linegraph_backward: reconstructed cut failed its checks");
  return cut;
}

// ---------------------------------------------------------------------------
// composition
// ---------------------------------------------------------------------------

ReductionCertificate compose_universal(const std::vector<Graph>& graphs) {
  if (graphs.empty()) throw ContractError("compose_universal: need at least one graph");
  CompositionData data;
  data.parts = graphs;
  int total = 0;
  for (const auto& g : graphs) {
    data.offsets.push_back(total);
    total += g.n();
  }
  Graph target(total + 1);
  data.universal_vertex = total;
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& part = graphs[i];
    int off = data.offsets[i];
    for (int v = 0; v < part.n(); ++v) {
      target.set_label(off + v, "g" + std::to_string(i) + ":" + vertex_name(part, v));
      if (part.weight(v) != 1) target.set_weight(off + v, part.weight(v));
    }
    for (auto [u, v] : part.edges()) target.add_edge(off + u, off + v);
  }
  target.set_label(total, "r");
  for (int v = 0; v < total; ++v) target.add_edge(v, total);
  // the disjoint-union source is kept for serialization; r is only in target
  Graph source(total);
  for (size_t i = 0; i < graphs.size(); ++i)
    for (auto [u, v] : graphs[i].edges())
      source.add_edge(data.offsets[i] + u, data.offsets[i] + v);
  return ReductionCertificate{ReductionKind::Composition, std::move(source), std::move(target),
                              ThresholdMap{"increment", 0, 1}, std::move(data)};
}

VertexSet composition_forward(const ReductionCertificate& cert, int part, const VertexSet& separator) {
  const auto& data = std::get<CompositionData>(cert.data);
  if (part < 0 || part >= int(data.parts.size()))
    throw ContractError("composition_forward: part index out of range");
  if (!is_minimal_separator(data.parts[part], separator))
    throw ContractError("composition_forward: not a minimal separator of the part");
  Bitset out(cert.target.n());
  for (int v = separator.first(); v != -1; v = separator.next(v)) out.set(data.offsets[part] + v);
  out.set(data.universal_vertex);
  return out;
}

std::pair<int, VertexSet> composition_backward(const ReductionCertificate& cert,
                                               const VertexSet& separator) {
  const auto& data = std::get<CompositionData>(cert.data);
  auto sep = is_minimal_separator(cert.target, separator);
  if (!sep) throw ContractError("composition_backward: not a minimal separator of the target");
  if (!separator.test(data.universal_vertex))
    throw Error("composition_backward: the universal vertex must be in every separator");

  auto part_of = [&](int v) {
    int p = int(data.offsets.size()) - 1;
    while (data.offsets[p] > v) --p;
    return p;
  };
  Bitset rest = separator;
  rest.reset(data.universal_vertex);
  int part;
  if (rest.any()) {
    // every removed vertex has neighbors in every full component, so the
    // whole witness lives inside one part
    part = part_of(rest.first());
    for (const auto& c : sep->full_components)
      for (int v = c.first(); v != -1; v = c.next(v))
        if (part_of(v) != part)
          throw Error("composition_backward: full components span multiple parts");
  } else {
    // S = {r}: localizes only to a part holding two full components, i.e. a
    // disconnected part
    part = -1;
    std::vector<int> hits(data.parts.size(), 0);
    for (const auto& c : sep->full_components)
      if (++hits[part_of(c.first())] >= 2) {
        part = part_of(c.first());
        break;
      }
    if (part == -1)
      throw Error("composition_backward: the bare universal vertex has no part-level counterpart");
  }
  int off = data.offsets[part];
  int pn = data.parts[part].n();
  Bitset local(pn);
  for (int v = rest.first(); v != -1; v = rest.next(v)) {
    if (v < off || v >= off + pn)
      throw Error("composition_backward: separator spans multiple parts");
    local.set(v - off);
  }
  if (!is_minimal_separator(data.parts[part], local))
    throw Error("composition_backward: localized set is not a minimal separator of its part");
  return {part, local};
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

namespace {

std::string opt_str(const std::optional<int64_t>& v) {
  return v ? std::to_string(*v) : std::string("none");
}

}  // namespace

std::string VerifyReport::summary() const {
  std::ostringstream out;
  out << kind << ": " << (pass ? "PASS" : "FAIL") << " (source optimum " << opt_str(source_value)
      << ", target optimum " << opt_str(target_value);
  if (!pass && first_violation) out << ", first violated threshold " << *first_violation;
  out << ")";
  for (const auto& n : notes) out << "\n  " << n;
  return out.str();
}

VerifyReport verify_reduction(const ReductionCertificate& cert, int max_n) {
  VerifyReport report;
  report.kind = reduction_kind_name(cert.kind);
  report.pass = true;

  auto check = [&](int64_t threshold, bool lhs, bool rhs) {
    if (lhs != rhs && report.pass) {
      report.pass = false;
      report.first_violation = threshold;
    }
  };

  switch (cert.kind) {
    case ReductionKind::Subdivision: {
      auto src = max_connected_cut_bruteforce(cert.source, false, max_n);
      auto tgt = max_minimal_separator_bruteforce(cert.target, false, max_n);
      report.source_value = src ? std::optional<int64_t>(src->cutset_size) : std::nullopt;
      report.target_value = tgt ? std::optional<int64_t>(tgt->second) : std::nullopt;
      int64_t kmax = std::max(report.source_value.value_or(0), report.target_value.value_or(0)) + 1;
      for (int64_t k = 0; k <= kmax; ++k)
        check(k, src && src->cutset_size >= k, tgt && tgt->second >= k);
      break;
    }
    case ReductionKind::Cobipartite: {
      const auto& data = std::get<CobipartiteData>(cert.data);
      int64_t ids = min_independent_dominating_set_bruteforce(data.reduced, max_n).count();
      auto tgt = max_minimal_separator_bruteforce(cert.target, false, max_n);
      report.source_value = ids;
      report.target_value = tgt ? std::optional<int64_t>(tgt->second) : std::nullopt;
      int64_t total = cert.threshold_map.total;
      report.notes.push_back("direction flips: minimum <= t on the source, maximum >= " +
                             std::to_string(total) + "-t on the target");
      for (int64_t t = 0; t <= total; ++t)
        check(t, ids <= t, tgt && tgt->second >= total - t);
      break;
    }
    case ReductionKind::LineGraph: {
      const auto& data = std::get<LineGraphData>(cert.data);
      auto src = max_connected_cut_bruteforce(data.pendant_graph, true, max_n);
      auto tgt = max_minimal_separator_bruteforce(cert.target, false, max_n);
      report.source_value = src ? std::optional<int64_t>(src->cutset_size) : std::nullopt;
      report.target_value = tgt ? std::optional<int64_t>(tgt->second) : std::nullopt;
      int64_t kmax = std::max(report.source_value.value_or(0), report.target_value.value_or(0)) + 1;
      // the correspondence is stated for thresholds above 1
      for (int64_t k = 2; k <= kmax; ++k)
        check(k, src && src->cutset_size >= k, tgt && tgt->second >= k);
      auto plain = max_connected_cut_bruteforce(cert.source, false, max_n);
      for (int64_t k = 2; k <= kmax; ++k)
        check(k, plain && plain->cutset_size >= k, src && src->cutset_size >= k);
      report.notes.push_back("pendant gadget: connected cuts of the source and non-trivial "
                             "connected cuts of the pendant graph agree above threshold 1");
      break;
    }
    case ReductionKind::Composition: {
      const auto& data = std::get<CompositionData>(cert.data);
      std::optional<int64_t> best_part;
      bool any_disconnected = false;
      for (const auto& part : data.parts) {
        auto v = max_minimal_separator_bruteforce(part, false, max_n);
        if (v && (!best_part || v->second > *best_part)) best_part = v->second;
        if (components(part, Bitset(part.n())).size() != 1) any_disconnected = true;
      }
      auto tgt = max_minimal_separator_bruteforce(cert.target, false, max_n);
      report.source_value = best_part;
      report.target_value = tgt ? std::optional<int64_t>(tgt->second) : std::nullopt;
      int64_t kmax = std::max(best_part.value_or(0), report.target_value.value_or(0)) + 1;
      for (int64_t k = 1; k <= kmax; ++k)
        check(k, best_part && *best_part >= k, tgt && tgt->second >= k + 1);
      if (best_part) {
        if (!tgt || tgt->second != *best_part + 1) {
          report.pass = false;
          if (!report.first_violation) report.first_violation = *best_part;
        }
        report.notes.push_back("target optimum equals source optimum plus one");
      } else {
        // no part has any minimal separator; the target can still have {r}
        bool expect_r = data.parts.size() >= 2 || any_disconnected;
        bool has_r = tgt && tgt->second == 1;
        bool has_none = !tgt;
        if (!(expect_r ? has_r : has_none)) {
          report.pass = false;
          if (!report.first_violation) report.first_violation = 0;
        }
        report.notes.push_back(
            "no part has a minimal separator; the universal vertex alone separates the target "
            "iff there are two or more parts or a disconnected part");
      }
      break;
    }
  }
  return report;
}

}  // namespace sepkit
