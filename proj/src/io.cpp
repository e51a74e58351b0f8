#include "sepkit/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace sepkit {

GraphFormat parse_format_name(const std::string& name) {
  if (name == "edgelist" || name == "edge-list") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw Error("unknown graph format: " + name);
}

namespace {

struct Line {
  int no;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text, char comment) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto cut = raw.find(comment);
    if (cut != std::string::npos) raw.resize(cut);
    std::istringstream ls(raw);
    Line line{no, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int64_t parse_int(const std::string& tok, int line_no) {
  try {
    size_t used = 0;
    int64_t v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line_no);
  }
}

Graph parse_edge_list(const std::string& text) {
  auto lines = tokenize(text, '#');
  struct WLine {
    int v;
    int64_t w;
    int line_no;
  };
  std::vector<std::pair<int, int>> edges;
  std::vector<WLine> weights;
  int max_id = -1;
  for (const auto& line : lines) {
    if (line.tokens[0] == "w") {
      if (line.tokens.size() != 3) throw ParseError("weight line must be 'w <vertex> <weight>'", line.no);
      int v = int(parse_int(line.tokens[1], line.no));
      int64_t w = parse_int(line.tokens[2], line.no);
      if (v < 0) throw ParseError("negative vertex id", line.no);
      if (w < 1) throw ParseError("vertex weight must be >= 1", line.no);
      weights.push_back({v, w, line.no});
      max_id = std::max(max_id, v);
    } else {
      if (line.tokens.size() != 2) throw ParseError("edge line must be '<u> <v>'", line.no);
      int u = int(parse_int(line.tokens[0], line.no));
      int v = int(parse_int(line.tokens[1], line.no));
      if (u < 0 || v < 0) throw ParseError("negative vertex id", line.no);
      if (u == v) throw ParseError("self-loop", line.no);
      edges.emplace_back(u, v);
      max_id = std::max({max_id, u, v});
    }
  }
  Graph g(max_id + 1);
  for (auto [u, v] : edges) g.add_edge(u, v);
  for (const auto& w : weights) g.set_weight(w.v, w.w);
  return g;
}

Graph parse_dimacs(const std::string& text) {
  auto lines = tokenize(text, '\0');
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "c") continue;
    if (t[0] == "p") {
      if (n != -1) throw ParseError("duplicate problem line", line.no);
      if (t.size() != 4 || t[1].rfind("edge", 0) != 0)
        throw ParseError("expected 'p edge <n> <m>'", line.no);
      n = int(parse_int(t[2], line.no));
      if (n < 0) throw ParseError("negative vertex count", line.no);
    } else if (t[0] == "e") {
      if (n == -1) throw ParseError("edge before problem line", line.no);
      if (t.size() != 3) throw ParseError("expected 'e <u> <v>'", line.no);
      int u = int(parse_int(t[1], line.no));
      int v = int(parse_int(t[2], line.no));
      if (u < 1 || v < 1 || u > n || v > n) throw ParseError("vertex id out of 1..n", line.no);
      if (u == v) throw ParseError("self-loop", line.no);
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError("unrecognized line '" + t[0] + "'", line.no);
    }
  }
  if (n == -1) throw ParseError("missing problem line", lines.empty() ? 1 : lines.back().no);
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_dimacs(text);
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (int v = 0; v < g.n(); ++v)
    if (g.weight(v) != 1 || g.degree(v) == 0) out << "w " << v << ' ' << g.weight(v) << '\n';
  return out.str();
}

std::string serialize_dimacs(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p edge " << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace sepkit
