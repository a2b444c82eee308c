#include "digraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace polytrope {

std::vector<int> nodes_of(NodeSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Digraph::Digraph(int nodes, EdgeSet e) : n(nodes), edges(e) {
  if (nodes < 1 || nodes > kMaxNodes) {
    fail(Status::resource_limit, "graphs are limited to 1.." + std::to_string(kMaxNodes) + " nodes");
  }
}

NodeSet Digraph::out(int u) const {
  return static_cast<NodeSet>((edges >> (u * kMaxNodes)) & 0xFFU);
}

NodeSet Digraph::in(int v) const {
  NodeSet s = 0;
  for (int u = 0; u < n; ++u) {
    if (has(u, v)) s |= node_mask(u);
  }
  return s;
}

std::vector<std::pair<int, int>> Digraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (has(u, v)) out.emplace_back(u, v);
  return out;
}

Digraph Digraph::complete(int n, bool loops) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (loops || u != v) g.add(u, v);
  return g;
}

Digraph induced(const Digraph& g, NodeSet nodes) {
  Digraph h(g.n);
  for (int u : nodes_of(nodes)) {
    for (int v : nodes_of(g.out(u) & nodes)) h.add(u, v);
  }
  return h;
}

std::vector<NodeSet> reach_sets(const Digraph& g) {
  std::vector<NodeSet> reach(static_cast<std::size_t>(g.n));
  for (int s = 0; s < g.n; ++s) {
    NodeSet seen = node_mask(s);
    NodeSet frontier = seen;
    while (frontier != 0) {
      NodeSet next = 0;
      for (int x : nodes_of(frontier)) next |= g.out(x);
      frontier = next & ~seen;
      seen |= next;
    }
    reach[static_cast<std::size_t>(s)] = seen;
  }
  return reach;
}

std::vector<NodeSet> strong_components(const Digraph& g) {
  const auto reach = reach_sets(g);
  std::vector<NodeSet> comps;
  NodeSet done = 0;
  for (int s = 0; s < g.n; ++s) {
    if (done & node_mask(s)) continue;
    NodeSet comp = 0;
    for (int t : nodes_of(reach[static_cast<std::size_t>(s)])) {
      if (reach[static_cast<std::size_t>(t)] & node_mask(s)) comp |= node_mask(t);
    }
    comps.push_back(comp);
    done |= comp;
  }
  return comps;
}

std::vector<NodeSet> sink_components(const Digraph& g) {
  std::vector<NodeSet> sinks;
  for (NodeSet comp : strong_components(g)) {
    bool leaves = false;
    for (int u : nodes_of(comp)) leaves = leaves || (g.out(u) & ~comp) != 0;
    if (!leaves) sinks.push_back(comp);
  }
  return sinks;
}

MultiGraph contraction(const Digraph& g, const std::vector<NodeSet>& blocks, bool keep_internal) {
  std::vector<int> block_of(static_cast<std::size_t>(g.n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int u : nodes_of(blocks[b])) {
      if (u >= g.n || block_of[static_cast<std::size_t>(u)] != -1) fail(Status::malformed, "blocks do not partition the nodes");
      block_of[static_cast<std::size_t>(u)] = static_cast<int>(b);
    }
  }
  if (std::count(block_of.begin(), block_of.end(), -1) != 0) fail(Status::malformed, "blocks do not partition the nodes");
  MultiGraph m;
  m.blocks = blocks;
  int id = 0;
  for (auto [u, v] : g.edge_list()) {
    const int bu = block_of[static_cast<std::size_t>(u)];
    const int bv = block_of[static_cast<std::size_t>(v)];
    if (bu == bv && !keep_internal) continue;
    m.edges.push_back({id++, bu, bv, u, v});
  }
  return m;
}

Digraph rooted_subgraph(const Digraph& g, int u) {
  const auto reach = reach_sets(g);
  Digraph h(g.n);
  for (auto [a, b] : g.edge_list()) {
    if (reach[static_cast<std::size_t>(b)] & node_mask(u)) h.add(a, b);
  }
  return h;
}

namespace {

void cycles_from(const Digraph& g, int start, int x, NodeSet visited, Cycle& stack, std::vector<Cycle>& out) {
  for (int y : nodes_of(g.out(x))) {
    if (y == start) {
      out.push_back(stack);
    } else if (y > start && !(visited & node_mask(y))) {
      stack.push_back(y);
      cycles_from(g, start, y, visited | node_mask(y), stack, out);
      stack.pop_back();
    }
  }
}

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const Digraph& g) {
  std::vector<Cycle> out;
  for (int s = 0; s < g.n; ++s) {
    Cycle stack{s};
    cycles_from(g, s, s, node_mask(s), stack, out);
  }
  std::stable_sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

EdgeSet cycle_edges(const Cycle& c) {
  EdgeSet e = 0;
  for (std::size_t i = 0; i < c.size(); ++i) e |= edge_mask(c[i], c[(i + 1) % c.size()]);
  return e;
}

NodeSet cycle_nodes(const Cycle& c) {
  NodeSet s = 0;
  for (int x : c) s |= node_mask(x);
  return s;
}

std::vector<Digraph> enumerate_in_trees(const Digraph& g, int root) {
  std::vector<int> others;
  for (int u = 0; u < g.n; ++u)
    if (u != root) others.push_back(u);
  std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
  std::vector<Digraph> out;

  auto reaches_root = [&](int u) {
    for (int steps = 0; steps <= g.n; ++steps) {
      if (u == root) return true;
      u = parent[static_cast<std::size_t>(u)];
      if (u < 0) return false;
    }
    return false;
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == others.size()) {
      for (int u : others)
        if (!reaches_root(u)) return;
      Digraph t(g.n);
      for (int u : others) t.add(u, parent[static_cast<std::size_t>(u)]);
      out.push_back(t);
      return;
    }
    const int u = others[k];
    for (int v : nodes_of(g.out(u) & ~node_mask(u))) {
      parent[static_cast<std::size_t>(u)] = v;
      self(self, k + 1);
    }
    parent[static_cast<std::size_t>(u)] = -1;
  };
  rec(rec, 0);
  return out;
}

std::vector<Path> simple_paths(const Digraph& g, int s, int t) {
  std::vector<Path> out;
  Path cur;
  cur.nodes.push_back(s);
  auto rec = [&](auto&& self, int x, NodeSet visited) -> void {
    for (int y : nodes_of(g.out(x))) {
      if (y == t) {
        Path p = cur;
        p.nodes.push_back(y);
        p.edges |= edge_mask(x, y);
        out.push_back(std::move(p));
      } else if (!(visited & node_mask(y))) {
        cur.nodes.push_back(y);
        const EdgeSet saved = cur.edges;
        cur.edges |= edge_mask(x, y);
        self(self, y, visited | node_mask(y));
        cur.edges = saved;
        cur.nodes.pop_back();
      }
    }
  };
  rec(rec, s, node_mask(s));
  return out;
}

bool is_circled_tree(const Digraph& g) {
  // A spanning in-tree has n - 1 edges; exactly one more closes the cycle.
  if (g.edge_count() != g.n) return false;
  const auto cycles = enumerate_simple_cycles(g);
  if (cycles.size() != 1) return false;
  const EdgeSet c = cycle_edges(cycles.front());
  for (int r = 0; r < g.n; ++r) {
    for (const Digraph& t : enumerate_in_trees(g, r)) {
      if ((t.edges | c) == g.edges) return true;
    }
  }
  return false;
}

bool is_connected_relation(const Digraph& g) {
  if (g.edges == 0) return false;
  if (g.n > 6) fail(Status::resource_limit, "connected-relation recognition is limited to 6 nodes");
  const auto cycles = enumerate_simple_cycles(g);
  EdgeSet covered = 0;
  for (int r = 0; r < g.n && covered != g.edges; ++r) {
    for (const Digraph& t : enumerate_in_trees(g, r)) {
      for (const Cycle& c : cycles) {
        const EdgeSet u = t.edges | cycle_edges(c);
        if (subset(u, covered)) continue;
        if (enumerate_simple_cycles(Digraph(g.n, u)).size() == 1) covered |= u;
      }
      if (covered == g.edges) break;
    }
  }
  return covered == g.edges;
}

std::string to_dot(const Digraph& g, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int u = 0; u < g.n; ++u) os << "  " << (u + 1) << ";\n";
  for (auto [u, v] : g.edge_list()) os << "  " << (u + 1) << " -> " << (v + 1) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace polytrope
