#include "sepkit/td.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace sepkit {

namespace {

std::vector<int> subtree_build(const DecompTree& tree, int node, TreeDecomposition& td) {
  const auto& n = tree.nodes[node];
  if (n.is_leaf) {
    td.bags.push_back(n.vertices);
    return {int(td.bags.size()) - 1};
  }
  std::vector<int> mine;
  std::vector<int> child_attach;
  for (int c : n.children) {
    auto sub = subtree_build(tree, c, td);
    int attach = -1;
    for (int b : sub)
      if (n.vertices.is_subset_of(td.bags[b])) {
        attach = b;
        break;
      }
    if (attach == -1) throw Error("assemble_td: no child bag contains the separator");
    child_attach.push_back(attach);
    mine.insert(mine.end(), sub.begin(), sub.end());
  }
  td.bags.push_back(n.vertices);
  int self = int(td.bags.size()) - 1;
  for (int b : child_attach) td.edges.emplace_back(self, b);
  mine.push_back(self);
  return mine;
}

}  // namespace

TreeDecomposition assemble_td(const DecompTree& tree) {
  if (tree.root < 0 || tree.root >= int(tree.nodes.size()))
    throw ContractError("assemble_td: malformed tree");
  TreeDecomposition td;
  subtree_build(tree, tree.root, td);
  return td;
}

bool validate_td(const Graph& g, const TreeDecomposition& t) {
  int nb = int(t.bags.size());
  if (nb == 0) return g.n() == 0;
  for (const auto& b : t.bags)
    if (b.universe() != g.n()) throw ContractError("validate_td: bag universe mismatch");

  // tree-ness
  if (int(t.edges.size()) != nb - 1) return false;
  std::vector<std::vector<int>> tadj(nb);
  for (auto [u, v] : t.edges) {
    if (u < 0 || v < 0 || u >= nb || v >= nb || u == v) return false;
    tadj[u].push_back(v);
    tadj[v].push_back(u);
  }
  std::vector<char> seen(nb, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++reached;
    for (int v : tadj[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  if (reached != nb) return false;

  // (1) vertices covered
  Bitset covered(g.n());
  for (const auto& b : t.bags) covered |= b;
  if (covered != g.vertices()) return false;

  // (2) edges covered
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (const auto& b : t.bags)
      if (b.test(u) && b.test(v)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }

  // (3) bags containing each vertex form a subtree
  for (int v = 0; v < g.n(); ++v) {
    int start = -1, want = 0;
    for (int b = 0; b < nb; ++b)
      if (t.bags[b].test(v)) {
        start = b;
        ++want;
      }
    if (start == -1) return false;
    std::vector<char> vis(nb, 0);
    std::vector<int> st{start};
    vis[start] = 1;
    int got = 0;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      ++got;
      for (int w : tadj[u])
        if (!vis[w] && t.bags[w].test(v)) {
          vis[w] = 1;
          st.push_back(w);
        }
    }
    if (got != want) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// dynamic program
// ---------------------------------------------------------------------------

namespace {

enum : uint8_t { C_SEP = 0, C_A = 1, C_B = 2, C_OUT = 3 };
constexpr uint8_t NO_BLOCK = 0xff;

struct NiceNode {
  enum Kind { Leaf, Introduce, Forget, Join } kind = Leaf;
  int vertex = -1;
  int child1 = -1, child2 = -1;
  std::vector<int> bag;  // sorted
};

struct NiceBuilder {
  const TreeDecomposition& t;
  std::vector<std::vector<int>> tadj;
  std::vector<std::vector<int>> bag_of;
  std::vector<NiceNode> out;

  explicit NiceBuilder(const TreeDecomposition& td) : t(td) {
    int nb = int(t.bags.size());
    tadj.resize(nb);
    for (auto [u, v] : t.edges) {
      tadj[u].push_back(v);
      tadj[v].push_back(u);
    }
    bag_of.resize(nb);
    for (int b = 0; b < nb; ++b) bag_of[b] = t.bags[b].members();
  }

  int add(NiceNode n) {
    out.push_back(std::move(n));
    return int(out.size()) - 1;
  }

  // chain of introduces building `bag` from scratch
  int build_leaf_chain(const std::vector<int>& bag) {
    int cur = add({NiceNode::Leaf, -1, -1, -1, {}});
    std::vector<int> partial;
    for (int v : bag) {
      partial.push_back(v);
      cur = add({NiceNode::Introduce, v, cur, -1, partial});
    }
    return cur;
  }

  // forget what `from` has extra, then introduce what `to` needs
  int morph(int node, const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> cur_bag = from;
    int cur = node;
    for (int v : from) {
      if (std::binary_search(to.begin(), to.end(), v)) continue;
      cur_bag.erase(std::find(cur_bag.begin(), cur_bag.end(), v));
      cur = add({NiceNode::Forget, v, cur, -1, cur_bag});
    }
    for (int v : to) {
      if (std::binary_search(from.begin(), from.end(), v)) continue;
      cur_bag.insert(std::lower_bound(cur_bag.begin(), cur_bag.end(), v), v);
      cur = add({NiceNode::Introduce, v, cur, -1, cur_bag});
    }
    return cur;
  }

  int process(int u, int parent) {
    std::vector<int> kids;
    for (int v : tadj[u])
      if (v != parent) kids.push_back(v);
    if (kids.empty()) return build_leaf_chain(bag_of[u]);
    int acc = -1;
    for (int c : kids) {
      int sub = process(c, u);
      int morphed = morph(sub, bag_of[c], bag_of[u]);
      acc = acc == -1 ? morphed : add({NiceNode::Join, -1, acc, morphed, bag_of[u]});
    }
    return acc;
  }

  std::vector<NiceNode> build() {
    if (t.bags.empty()) {
      add({NiceNode::Leaf, -1, -1, -1, {}});
      return std::move(out);
    }
    int top = process(0, -1);
    morph(top, bag_of[0], {});
    return std::move(out);
  }
};

struct DpState {
  std::vector<uint8_t> color;
  std::vector<uint8_t> ablock;  // NO_BLOCK unless color A
  std::vector<uint8_t> bblock;  // NO_BLOCK unless color B
  std::vector<uint8_t> flags;   // bit0 touched-A, bit1 touched-B; SEP only
  bool nonempty_a = false, nonempty_b = false;
  bool closed_a = false, closed_b = false;

  void canonicalize() {
    renumber(ablock);
    renumber(bblock);
  }
  static void renumber(std::vector<uint8_t>& blocks) {
    uint8_t map[256];
    std::fill(std::begin(map), std::end(map), NO_BLOCK);
    uint8_t next = 0;
    for (auto& b : blocks) {
      if (b == NO_BLOCK) continue;
      if (map[b] == NO_BLOCK) map[b] = next++;
      b = map[b];
    }
  }
  std::string encode() const {
    std::string key;
    key.reserve(color.size() * 4 + 1);
    key.append(color.begin(), color.end());
    key.append(ablock.begin(), ablock.end());
    key.append(bblock.begin(), bblock.end());
    key.append(flags.begin(), flags.end());
    key.push_back(char(nonempty_a | nonempty_b << 1 | closed_a << 2 | closed_b << 3));
    return key;
  }
  static DpState decode(const std::string& key, size_t bag) {
    DpState st;
    auto grab = [&](size_t off) {
      return std::vector<uint8_t>(key.begin() + off, key.begin() + off + bag);
    };
    st.color = grab(0);
    st.ablock = grab(bag);
    st.bblock = grab(2 * bag);
    st.flags = grab(3 * bag);
    uint8_t bits = uint8_t(key[4 * bag]);
    st.nonempty_a = bits & 1;
    st.nonempty_b = bits & 2;
    st.closed_a = bits & 4;
    st.closed_b = bits & 8;
    return st;
  }
};

struct Entry {
  int64_t value = 0;
  Bitset witness;
};

using Table = std::unordered_map<std::string, Entry>;

bool forbidden_pair(uint8_t c1, uint8_t c2) {
  // A, B and OUT must be pairwise nonadjacent; SEP may touch anything
  return c1 != C_SEP && c2 != C_SEP && c1 != c2;
}

// positions sharing a block on either side end up in one block
void merge_blocks(std::vector<uint8_t>& left, const std::vector<uint8_t>& right) {
  size_t n = left.size();
  std::vector<uint8_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = uint8_t(i);
  auto find = [&](uint8_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](size_t a, size_t b) { parent[find(uint8_t(a))] = find(uint8_t(b)); };
  for (size_t p = 0; p < n; ++p) {
    if (left[p] == NO_BLOCK) continue;
    for (size_t q = p + 1; q < n; ++q) {
      if (left[q] == NO_BLOCK) continue;
      if (left[p] == left[q] || right[p] == right[q]) unite(p, q);
    }
  }
  for (size_t p = 0; p < n; ++p)
    if (left[p] != NO_BLOCK) left[p] = find(uint8_t(p));
}

void insert_state(Table& table, const Graph& g, bool weighted, DpState st, Bitset witness) {
  st.canonicalize();
  int64_t value = weighted ? g.weight_of(witness) : witness.count();
  auto key = st.encode();
  auto it = table.find(key);
  if (it == table.end()) {
    table.emplace(std::move(key), Entry{value, std::move(witness)});
  } else if (value > it->second.value ||
             (value == it->second.value && set_less(witness, it->second.witness))) {
    it->second = Entry{value, std::move(witness)};
  }
}

}  // namespace

std::optional<std::pair<Separator, int64_t>>
max_minimal_separator_dp(const Graph& g, const TreeDecomposition& t, bool weighted) {
  if (!validate_td(g, t)) throw ContractError("max_minimal_separator_dp: invalid tree decomposition");
  if (t.width() + 1 >= int(NO_BLOCK)) throw ScaleError("max_minimal_separator_dp: width too large");

  auto nice = NiceBuilder(t).build();
  std::vector<Table> tables(nice.size());

  for (size_t i = 0; i < nice.size(); ++i) {
    const NiceNode& node = nice[i];
    Table& table = tables[i];
    const auto& bag = node.bag;

    switch (node.kind) {
      case NiceNode::Leaf: {
        insert_state(table, g, weighted, DpState{}, Bitset(g.n()));
        break;
      }

      case NiceNode::Introduce: {
        const Table& child = tables[node.child1];
        int v = node.vertex;
        size_t p = std::lower_bound(bag.begin(), bag.end(), v) - bag.begin();
        size_t child_bag = bag.size() - 1;
        for (const auto& [key, entry] : child) {
          DpState cs = DpState::decode(key, child_bag);
          // bag neighbors of v, as positions in the child bag
          std::vector<size_t> nbr;
          for (size_t q = 0, bq = 0; bq < bag.size(); ++bq) {
            if (bq == p) continue;
            if (g.has_edge(bag[bq], v)) nbr.push_back(q);
            ++q;
          }
          for (uint8_t c : {C_SEP, C_A, C_B, C_OUT}) {
            bool legal = true;
            for (size_t q : nbr)
              if (forbidden_pair(c, cs.color[q])) {
                legal = false;
                break;
              }
            if (!legal) continue;
            if (c == C_A && cs.closed_a) continue;
            if (c == C_B && cs.closed_b) continue;

            DpState st = cs;
            uint8_t vflags = 0;
            if (c == C_SEP) {
              for (size_t q : nbr) {
                if (st.color[q] == C_A) vflags |= 1;
                if (st.color[q] == C_B) vflags |= 2;
              }
            }
            uint8_t vblock = NO_BLOCK;
            if (c == C_A || c == C_B) {
              auto& blocks = c == C_A ? st.ablock : st.bblock;
              // fresh block, merged with every block seen among like-colored
              // neighbors
              uint8_t fresh = 0;
              for (uint8_t b : blocks)
                if (b != NO_BLOCK) fresh = std::max<uint8_t>(fresh, b + 1);
              vblock = fresh;
              for (size_t q : nbr)
                if (st.color[q] == c) {
                  uint8_t old = blocks[q];
                  for (auto& b : blocks)
                    if (b == old) b = vblock;
                }
              for (size_t q : nbr)
                if (st.color[q] == C_SEP) st.flags[q] |= (c == C_A ? 1 : 2);
              (c == C_A ? st.nonempty_a : st.nonempty_b) = true;
            }
            st.color.insert(st.color.begin() + p, c);
            st.ablock.insert(st.ablock.begin() + p, c == C_A ? vblock : NO_BLOCK);
            st.bblock.insert(st.bblock.begin() + p, c == C_B ? vblock : NO_BLOCK);
            st.flags.insert(st.flags.begin() + p, vflags);

            Bitset witness = entry.witness;
            if (c == C_SEP) witness.set(v);
            insert_state(table, g, weighted, std::move(st), std::move(witness));
          }
        }
        break;
      }

      case NiceNode::Forget: {
        const Table& child = tables[node.child1];
        int v = node.vertex;
        const auto& cbag = nice[node.child1].bag;
        size_t p = std::lower_bound(cbag.begin(), cbag.end(), v) - cbag.begin();
        size_t child_bag = cbag.size();
        for (const auto& [key, entry] : child) {
          DpState cs = DpState::decode(key, child_bag);
          uint8_t c = cs.color[p];
          if (c == C_SEP && cs.flags[p] != 3) continue;  // never touched both sides
          if (c == C_A || c == C_B) {
            auto& blocks = c == C_A ? cs.ablock : cs.bblock;
            uint8_t mine = blocks[p];
            int same = 0, other = 0;
            for (size_t q = 0; q < child_bag; ++q) {
              if (q == p || blocks[q] == NO_BLOCK) continue;
              blocks[q] == mine ? ++same : ++other;
            }
            if (same == 0) {
              // last live vertex of its block: the component is finished
              if (other > 0) continue;  // it could never rejoin the rest
              (c == C_A ? cs.closed_a : cs.closed_b) = true;
            }
          }
          cs.color.erase(cs.color.begin() + p);
          cs.ablock.erase(cs.ablock.begin() + p);
          cs.bblock.erase(cs.bblock.begin() + p);
          cs.flags.erase(cs.flags.begin() + p);
          insert_state(table, g, weighted, std::move(cs), entry.witness);
        }
        break;
      }

      case NiceNode::Join: {
        const Table& left = tables[node.child1];
        const Table& right = tables[node.child2];
        size_t bagsz = bag.size();
        // group right-hand states by coloring
        std::unordered_map<std::string, std::vector<const std::pair<const std::string, Entry>*>>
            by_color;
        for (const auto& kv : right)
          by_color[kv.first.substr(0, bagsz)].push_back(&kv);
        for (const auto& [lkey, lentry] : left) {
          auto it = by_color.find(lkey.substr(0, bagsz));
          if (it == by_color.end()) continue;
          DpState ls = DpState::decode(lkey, bagsz);
          for (const auto* rkv : it->second) {
            DpState rs = DpState::decode(rkv->first, bagsz);
            if ((ls.closed_a && rs.nonempty_a) || (rs.closed_a && ls.nonempty_a)) continue;
            if ((ls.closed_b && rs.nonempty_b) || (rs.closed_b && ls.nonempty_b)) continue;

            DpState st = ls;
            st.nonempty_a = ls.nonempty_a || rs.nonempty_a;
            st.nonempty_b = ls.nonempty_b || rs.nonempty_b;
            st.closed_a = ls.closed_a || rs.closed_a;
            st.closed_b = ls.closed_b || rs.closed_b;
            for (size_t q = 0; q < bagsz; ++q) st.flags[q] = ls.flags[q] | rs.flags[q];
            merge_blocks(st.ablock, rs.ablock);
            merge_blocks(st.bblock, rs.bblock);

            Bitset witness = lentry.witness | rkv->second.witness;
            insert_state(table, g, weighted, std::move(st), std::move(witness));
          }
        }
        break;
      }
    }

    if (node.child1 != -1) tables[node.child1].clear();
    if (node.child2 != -1) tables[node.child2].clear();
  }

  const Table& root = tables.back();
  const Entry* best = nullptr;
  for (const auto& [key, entry] : root) {
    DpState st = DpState::decode(key, 0);
    if (!st.nonempty_a || !st.nonempty_b) continue;
    if (!best || entry.value > best->value ||
        (entry.value == best->value && set_less(entry.witness, best->witness)))
      best = &entry;
  }
  if (!best) return std::nullopt;
  auto sep = is_minimal_separator(g, best->witness);
  if (!sep) throw Error("max_minimal_separator_dp: optimal state failed certification");
  return std::make_pair(std::move(*sep), best->value);
}

std::string serialize_td_pace(const TreeDecomposition& t, int n_vertices) {
  std::ostringstream out;
  out << "s td " << t.bags.size() << ' ' << t.width() + 1 << ' ' << n_vertices << '\n';
  for (size_t b = 0; b < t.bags.size(); ++b) {
    out << "b " << b + 1;
    for (int v : t.bags[b].members()) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [u, v] : t.edges) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

TreeDecomposition parse_td_pace(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  TreeDecomposition td;
  int nb = -1, n = -1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "s") {
      std::string kind;
      int w;
      if (!(ls >> kind >> nb >> w >> n) || kind != "td")
        throw ParseError("expected 's td <bags> <width+1> <n>'", line_no);
      td.bags.assign(nb, Bitset(n));
    } else if (tok == "b") {
      int id;
      if (nb < 0 || !(ls >> id) || id < 1 || id > nb) throw ParseError("bad bag line", line_no);
      int v;
      while (ls >> v) {
        if (v < 1 || v > n) throw ParseError("bag vertex out of range", line_no);
        td.bags[id - 1].set(v - 1);
      }
    } else {
      int u = std::stoi(tok), v;
      if (nb < 0 || !(ls >> v) || u < 1 || v < 1 || u > nb || v > nb)
        throw ParseError("bad tree edge", line_no);
      td.edges.emplace_back(u - 1, v - 1);
    }
  }
  if (nb < 0) throw ParseError("missing 's td' header", line_no);
  return td;
}

}  // namespace sepkit
