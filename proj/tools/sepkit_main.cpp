#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepkit/fpt.hpp"
#include "sepkit/gen.hpp"
#include "sepkit/graph.hpp"
#include "sepkit/io.hpp"
#include "sepkit/oracle.hpp"
#include "sepkit/reductions.hpp"
#include "sepkit/td.hpp"

using json = nlohmann::json;
using namespace sepkit;

namespace {

json separator_json(const Graph& g, const Separator& sep) {
  json comps = json::array();
  for (const auto& c : sep.full_components) comps.push_back(c.members());
  return json{{"separator", sep.set.members()},
              {"full_components", comps},
              {"size", sep.size()},
              {"weight", sep.weight(g)}};
}

Graph load_graph(const std::string& path, const std::string& format) {
  return read_graph_file(path, parse_format_name(format));
}

VertexSet parse_vertex_list(const std::string& csv, int n) {
  Bitset out(n);
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v < 0 || v >= n) throw Error("vertex id " + tok + " outside 0.." + std::to_string(n - 1));
    out.set(v);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

json graph_json(const Graph& g) {
  return json{{"n", g.n()}, {"m", g.m()}, {"edgelist", serialize_edge_list(g)}};
}

json threshold_map_json(const ThresholdMap& tm) {
  json j{{"name", tm.name}};
  if (tm.name == "complement_flip") j["total"] = tm.total;
  if (tm.name == "increment") j["delta"] = tm.delta;
  return j;
}

json certificate_json(const ReductionCertificate& cert) {
  json j{{"kind", reduction_kind_name(cert.kind)},
         {"source", graph_json(cert.source)},
         {"target", graph_json(cert.target)},
         {"threshold_map", threshold_map_json(cert.threshold_map)}};
  if (const auto* sd = std::get_if<SubdivisionData>(&cert.data)) {
    j["edge_vertices"] = sd->edge_vertices;
  } else if (const auto* cd = std::get_if<CobipartiteData>(&cert.data)) {
    j["reduced_source"] = graph_json(cd->reduced);
    j["side_a"] = cd->side_a.members();
    j["side_b"] = cd->side_b.members();
    j["removed_forced"] = cd->removed_forced;
    j["removed_irrelevant"] = cd->removed_irrelevant;
  } else if (const auto* ld = std::get_if<LineGraphData>(&cert.data)) {
    j["pendant_graph"] = graph_json(ld->pendant_graph);
    j["edge_vertices"] = ld->edge_vertices;
    j["pendants"] = ld->pendants;
  } else if (const auto* kd = std::get_if<CompositionData>(&cert.data)) {
    j["offsets"] = kd->offsets;
    j["universal_vertex"] = kd->universal_vertex;
    json parts = json::array();
    for (const auto& p : kd->parts) parts.push_back(graph_json(p));
    j["parts"] = parts;
  }
  return j;
}

// two-coloring; throws when no bipartition exists
std::pair<VertexSet, VertexSet> bipartition_of(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  Bitset a(g.n()), b(g.n());
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
          throw Error("graph is not bipartite");
        }
      }
    }
  }
  for (int v = 0; v < g.n(); ++v) (color[v] == 0 ? a : b).set(v);
  return {a, b};
}

int cmd_solve(const std::string& input, const std::string& format, int64_t k, bool weighted,
              const std::string& engine, const std::string& emit_td) {
  Graph g = load_graph(input, format);
  auto start = std::chrono::steady_clock::now();
  json out{{"engine", engine}};
  bool decision = false;

  if (engine == "fpt") {
    SolveResult res = solve(g, k, weighted);
    decision = res.decision;
    if (res.certificate) out["certificate"] = separator_json(g, *res.certificate);
  } else if (engine == "oracle") {
    auto best = max_minimal_separator_bruteforce(g, weighted);
    decision = best && best->second >= k;
    if (best && decision) out["certificate"] = separator_json(g, best->first);
  } else if (engine == "dp") {
    // expose the decomposition route: build a decomposition with the
    // recursion, then run the dynamic program on it
    if (!is_connected(g)) throw Error("--engine dp needs a connected input");
    if (is_clique(g, g.vertices())) throw Error("--engine dp: complete graph, nothing to decompose");
    SolveStats stats;
    auto outcome = find_sep(g, Bitset(g.n()), std::max<int64_t>(k, 1), Lineage{}, g, weighted, &stats);
    if (!std::holds_alternative<DecompositionOutcome>(outcome))
      throw Error("--engine dp: the recursion short-circuited with a YES answer; use --engine fpt");
    TreeDecomposition td = assemble_td(std::get<DecompositionOutcome>(outcome).tree);
    if (!emit_td.empty()) write_text(emit_td, serialize_td_pace(td, g.n()));
    out["td_width"] = td.width();
    auto best = max_minimal_separator_dp(g, td, weighted);
    decision = best && best->second >= k;
    if (best && decision) out["certificate"] = separator_json(g, best->first);
  } else {
    throw Error("unknown engine: " + engine);
  }

  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  out["decision"] = decision;
  out["elapsed_ms"] = elapsed.count();
  std::cout << out.dump() << '\n';
  return decision ? 0 : 1;
}

int cmd_enumerate(const std::string& input, const std::string& format, const std::string& engine,
                  int64_t limit) {
  Graph g = load_graph(input, format);
  int64_t count = 0;
  auto emit = [&](const Separator& s) {
    std::cout << separator_json(g, s).dump() << '\n';
    ++count;
    return limit <= 0 || count < limit;
  };
  if (engine == "delay") {
    enum_minimal_separators_delay(g, emit);
  } else if (engine == "bruteforce") {
    for (const auto& s : enum_minimal_separators_bruteforce(g))
      if (!emit(s)) break;
  } else {
    throw Error("unknown engine: " + engine);
  }
  std::cout << json{{"count", count}}.dump() << '\n';
  return 0;
}

int cmd_verify(const std::string& input, const std::string& format, const std::string& sep_csv) {
  Graph g = load_graph(input, format);
  VertexSet s = parse_vertex_list(sep_csv, g.n());
  auto sep = is_minimal_separator(g, s);
  if (!sep) {
    std::cout << json{{"minimal_separator", false}}.dump() << '\n';
    return 1;
  }
  std::cout << separator_json(g, *sep).dump() << '\n';
  return 0;
}

int cmd_reduce(const std::string& kind, const std::vector<std::string>& inputs,
               const std::string& format, const std::string& out_path, bool verify,
               const std::string& side_a_csv) {
  std::vector<Graph> graphs;
  for (const auto& path : inputs) graphs.push_back(load_graph(path, format));

  ReductionCertificate cert = [&] {
    if (kind == "subdivide") return subdivide_cubic(graphs.at(0));
    if (kind == "cobipartite") {
      const Graph& g = graphs.at(0);
      if (!side_a_csv.empty()) {
        VertexSet a = parse_vertex_list(side_a_csv, g.n());
        return cobipartite_reduction(g, a, g.vertices() - a);
      }
      auto [a, b] = bipartition_of(g);
      return cobipartite_reduction(g, a, b);
    }
    if (kind == "linegraph") return linegraph_reduction(graphs.at(0));
    if (kind == "compose") return compose_universal(graphs);
    throw Error("unknown reduction kind: " + kind);
  }();

  json j = certificate_json(cert);
  if (verify) {
    VerifyReport report = verify_reduction(cert);
    j["verify"] = {{"pass", report.pass}, {"summary", report.summary()}};
    if (report.first_violation) j["verify"]["first_violation"] = *report.first_violation;
    std::cerr << report.summary() << '\n';
    if (!out_path.empty()) write_text(out_path, j.dump(2) + "\n");
    else std::cout << j.dump() << '\n';
    return report.pass ? 0 : 1;
  }
  if (!out_path.empty()) write_text(out_path, j.dump(2) + "\n");
  else std::cout << j.dump() << '\n';
  return 0;
}

int cmd_gen(const std::string& family, int n, int rows, int cols, int a, int b, double p,
            uint64_t seed, const std::string& out_path, const std::string& format) {
  Graph g = [&] {
    if (family == "path") return gen_path(n);
    if (family == "cycle") return gen_cycle(n);
    if (family == "grid") return gen_grid(rows, cols);
    if (family == "complete") return gen_complete(n);
    if (family == "complete-bipartite") return gen_complete_bipartite(a, b);
    if (family == "random-gnp") return gen_gnp(n, p, seed);
    if (family == "random-cubic") return gen_random_cubic(n, seed);
    if (family == "random-bipartite") return gen_random_bipartite(a, b, p, seed);
    throw Error("unknown family: " + family);
  }();
  std::string text = format == "dimacs" ? serialize_dimacs(g) : serialize_edge_list(g);
  if (!out_path.empty()) write_text(out_path, text);
  else std::cout << text;
  return 0;
}

int cmd_oracle(const std::string& op, const std::string& input, const std::string& format,
               bool weighted, bool nontrivial) {
  Graph g = load_graph(input, format);
  json out;
  if (op == "max-separator") {
    auto best = max_minimal_separator_bruteforce(g, weighted);
    out["exists"] = bool(best);
    if (best) {
      out["value"] = best->second;
      out["certificate"] = separator_json(g, best->first);
    }
  } else if (op == "connected-cut") {
    auto best = max_connected_cut_bruteforce(g, nontrivial);
    out["exists"] = bool(best);
    if (best) {
      out["cutset_size"] = best->cutset_size;
      out["side_a"] = best->side_a.members();
      out["side_b"] = best->side_b.members();
      out["nontrivial"] = best->nontrivial;
    }
  } else if (op == "min-independent-dominating") {
    auto s = min_independent_dominating_set_bruteforce(g);
    out["size"] = s.count();
    out["set"] = s.members();
  } else if (op == "bicliques") {
    auto [a, b] = bipartition_of(g);
    json list = json::array();
    for (const auto& bc : maximal_bicliques_bruteforce(g, a, b))
      list.push_back(json{{"vertices", bc.vertices.members()}, {"both_sides", bc.hits_both_sides}});
    out["bicliques"] = list;
    out["side_a"] = a.members();
    out["side_b"] = b.members();
  } else {
    throw Error("unknown oracle op: " + op);
  }
  std::cout << out.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal separator toolkit"};
  app.require_subcommand(1);

  std::string input, format = "edgelist", engine, emit_td, sep_csv, kind, out_path, family, side_a;
  std::vector<std::string> inputs;
  int64_t k = 0, limit = 0;
  bool weighted = false, verify = false, nontrivial = false;
  int n = 0, rows = 0, cols = 0, a = 0, b = 0;
  double p = 0.5;
  uint64_t seed = 1;
  std::string oracle_op;

  auto* solve_cmd = app.add_subcommand("solve", "decide a minimal separator of size >= k");
  solve_cmd->add_option("--input", input)->required();
  solve_cmd->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  solve_cmd->add_option("--k", k)->required();
  solve_cmd->add_flag("--weighted", weighted);
  engine = "fpt";
  solve_cmd->add_option("--engine", engine)->check(CLI::IsMember({"fpt", "dp", "oracle"}));
  solve_cmd->add_option("--emit-td", emit_td);

  auto* enum_cmd = app.add_subcommand("enumerate", "stream all minimal separators");
  enum_cmd->add_option("--input", input)->required();
  enum_cmd->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  std::string enum_engine = "delay";
  enum_cmd->add_option("--engine", enum_engine)->check(CLI::IsMember({"delay", "bruteforce"}));
  enum_cmd->add_option("--limit", limit);

  auto* verify_cmd = app.add_subcommand("verify", "check a separator certificate");
  verify_cmd->add_option("--input", input)->required();
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  verify_cmd->add_option("--separator", sep_csv)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "run a constructive reduction");
  reduce_cmd->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"subdivide", "cobipartite", "linegraph", "compose"}));
  reduce_cmd->add_option("--input", inputs)->required();
  reduce_cmd->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  reduce_cmd->add_option("--out", out_path);
  reduce_cmd->add_flag("--verify", verify);
  reduce_cmd->add_option("--side-a", side_a, "comma separated vertices of one bipartition side");

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph file");
  gen_cmd->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "grid", "complete", "complete-bipartite",
                             "random-gnp", "random-cubic", "random-bipartite"}));
  gen_cmd->add_option("-n", n);
  gen_cmd->add_option("-r", rows);
  gen_cmd->add_option("-c", cols);
  gen_cmd->add_option("-a", a);
  gen_cmd->add_option("-b", b);
  gen_cmd->add_option("-p", p);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--out", out_path);
  gen_cmd->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference queries");
  oracle_cmd->add_option("op", oracle_op)
      ->required()
      ->check(CLI::IsMember({"max-separator", "connected-cut", "min-independent-dominating",
                             "bicliques"}));
  oracle_cmd->add_option("--input", input)->required();
  oracle_cmd->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  oracle_cmd->add_flag("--weighted", weighted);
  oracle_cmd->add_flag("--nontrivial", nontrivial);

  try {
    app.parse(argc, argv);
    if (solve_cmd->parsed()) return cmd_solve(input, format, k, weighted, engine, emit_td);
    if (enum_cmd->parsed()) return cmd_enumerate(input, format, enum_engine, limit);
    if (verify_cmd->parsed()) return cmd_verify(input, format, sep_csv);
    if (reduce_cmd->parsed()) return cmd_reduce(kind, inputs, format, out_path, verify, side_a);
    if (gen_cmd->parsed())
      return cmd_gen(family, n, rows, cols, a, b, p, seed, out_path, format);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_op, input, format, weighted, nontrivial);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
