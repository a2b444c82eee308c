#include "relations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "errors.hpp"

namespace polytrope {

ConnectedRelation make_relation(const Digraph& g) {
  const auto sinks = sink_components(g);
  ConnectedRelation r;
  r.graph = g;
  r.sink = sinks.size() == 1 ? sinks.front() : 0;
  return r;
}

CompleteSet::CompleteSet(int n, std::vector<ConnectedRelation> parts) : n_(n), parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), [](const ConnectedRelation& a, const ConnectedRelation& b) {
    const int ka = a.sink == 0 ? kMaxNodes : min_node(a.sink);
    const int kb = b.sink == 0 ? kMaxNodes : min_node(b.sink);
    if (ka != kb) return ka < kb;
    return a < b;
  });
  owner_.assign(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (int u : nodes_of(parts_[i].sink)) {
      if (u < n_ && owner_[static_cast<std::size_t>(u)] == -1) owner_[static_cast<std::size_t>(u)] = static_cast<int>(i);
    }
  }
}

CompleteSet CompleteSet::from_graphs(int n, const std::vector<Digraph>& graphs) {
  std::vector<ConnectedRelation> parts;
  parts.reserve(graphs.size());
  for (const auto& g : graphs) parts.push_back(make_relation(g));
  return CompleteSet(n, std::move(parts));
}

const ConnectedRelation& CompleteSet::part_of(int u) const {
  const int i = owner(u);
  if (i < 0) fail(Status::invalid, "node " + std::to_string(u + 1) + " is not in any sink");
  return parts_[static_cast<std::size_t>(i)];
}

std::strong_ordering CompleteSet::operator<=>(const CompleteSet& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  return parts_ <=> other.parts_;
}

std::size_t CompleteSetHash::operator()(const CompleteSet& g) const noexcept {
  std::size_t h = std::hash<int>{}(g.n());
  for (const auto& p : g.parts()) {
    h ^= std::hash<std::uint64_t>{}(p.graph.edges) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint32_t>{}(p.sink) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

Violation violation(char clause, std::string message, std::vector<int> witness) {
  return Violation{clause, std::move(message), std::move(witness)};
}

std::string one_based(int u) { return std::to_string(u + 1); }

EdgeSet inter_block_edges(const Digraph& g, const std::vector<int>& block_of) {
  EdgeSet e = 0;
  for (auto [u, v] : g.edge_list()) {
    if (block_of[static_cast<std::size_t>(u)] != block_of[static_cast<std::size_t>(v)]) e |= edge_mask(u, v);
  }
  return e;
}

// Blocks (as a bitmask over block indices) reaching block `root` through `inter`.
std::uint32_t blocks_reaching(EdgeSet inter, const std::vector<int>& block_of, int root) {
  std::uint32_t seen = 1U << root;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int e = 0; e < 64; ++e) {
      if (!((inter >> e) & 1U)) continue;
      const int bu = block_of[static_cast<std::size_t>(e / kMaxNodes)];
      const int bv = block_of[static_cast<std::size_t>(e % kMaxNodes)];
      if ((seen & (1U << bv)) && !(seen & (1U << bu))) {
        seen |= 1U << bu;
        grew = true;
      }
    }
  }
  return seen;
}

bool is_prefix(const Path& q, const Path& p) {
  return q.nodes.size() <= p.nodes.size() && std::equal(q.nodes.begin(), q.nodes.end(), p.nodes.begin());
}

}  // namespace

std::optional<Violation> check_part_pair(const ConnectedRelation& gi, const ConnectedRelation& gj,
                                         const std::vector<NodeSet>& blocks) {
  const int n = gi.graph.n;
  std::vector<int> block_of(static_cast<std::size_t>(n), 0);
  int bi = -1;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int u : nodes_of(blocks[b])) block_of[static_cast<std::size_t>(u)] = static_cast<int>(b);
    if (blocks[b] == gi.sink) bi = static_cast<int>(b);
  }
  if (bi < 0) fail(Status::internal, "part sink is not a block");

  // (b) contraction of gj rooted at the sink of gi equals the induced contraction of gi.
  const EdgeSet inter_i = inter_block_edges(gi.graph, block_of);
  const EdgeSet inter_j = inter_block_edges(gj.graph, block_of);
  const std::uint32_t reach = blocks_reaching(inter_j, block_of, bi);
  EdgeSet rooted = 0;
  EdgeSet induced_i = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const bool in_u = reach & (1U << block_of[static_cast<std::size_t>(u)]);
      const bool in_v = reach & (1U << block_of[static_cast<std::size_t>(v)]);
      if ((inter_j & edge_mask(u, v)) && in_v) rooted |= edge_mask(u, v);
      if ((inter_i & edge_mask(u, v)) && in_u && in_v) induced_i |= edge_mask(u, v);
    }
  }
  if (rooted != induced_i) {
    const int u = min_node(gi.sink);
    const int v = min_node(gj.sink);
    return Violation{'b',
                     "contraction of the part with sink node " + one_based(v) +
                         ", rooted at the sink containing node " + one_based(u) +
                         ", differs from the induced contraction of that part",
                     {u, v}};
  }

  // (c) a path w -> v of gj that is present in gi must not branch towards u.
  for (int u : nodes_of(gi.sink)) {
    for (int v : nodes_of(gj.sink)) {
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const auto qs = simple_paths(gj.graph, w, u);
        if (qs.empty()) continue;
        for (const Path& p : simple_paths(gj.graph, w, v)) {
          if (!subset(p.edges, gi.graph.edges)) continue;
          for (const Path& q : qs) {
            if (!is_prefix(q, p)) {
              return Violation{'c',
                               "paths from node " + one_based(w) + " to nodes " + one_based(v) + " and " +
                                   one_based(u) + " are incompatible",
                               {u, v, w}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

ValidationReport validate_complete(const CompleteSet& g) {
  ValidationReport report;
  auto reject = [&](Violation v) {
    report.ok = false;
    report.violations.push_back(std::move(v));
    return report;
  };
  const int n = g.n();
  const auto& parts = g.parts();
  if (parts.empty()) return reject(violation('a', "no parts given", {}));

  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    if (p.graph.n != n) return reject(violation('p', "part " + std::to_string(i + 1) + " has the wrong node count", {static_cast<int>(i)}));
    if (p.sink == 0) {
      return reject(violation('p', "part " + std::to_string(i + 1) + " does not have a unique sink component", {static_cast<int>(i)}));
    }
    if (!is_connected_relation(p.graph)) {
      return reject(violation('p', "part " + std::to_string(i + 1) + " is not a connected relation", {static_cast<int>(i)}));
    }
  }

  // (a) sinks partition the node set.
  NodeSet covered = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const NodeSet s = parts[i].sink;
    if (covered & s) {
      const int u = min_node(covered & s);
      return reject(violation('a', "sinks overlap at node " + one_based(u), {u}));
    }
    covered |= s;
  }
  const NodeSet all = (NodeSet{1} << n) - 1;
  if (covered != all) {
    const int u = min_node(all & ~covered);
    return reject(violation('a', "sinks do not partition the nodes: missing a part whose sink contains node " + one_based(u), {u}));
  }

  std::vector<NodeSet> blocks;
  for (const auto& p : parts) blocks.push_back(p.sink);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i == j) continue;
      if (auto v = check_part_pair(parts[i], parts[j], blocks)) return reject(std::move(*v));
    }
  }
  return report;
}

std::vector<EdgeSet> path_profile(const CompleteSet& g) {
  const int n = g.n();
  std::vector<EdgeSet> profile(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const Digraph& gv = g.part_of(v).graph;
    const auto reach_all = reach_sets(gv);
    EdgeSet e = 0;
    for (auto [a, b] : gv.edge_list()) {
      bool on_path = false;
      if (b == v) {
        on_path = true;
      } else if (a == v) {
        on_path = reach_all[static_cast<std::size_t>(b)] & node_mask(v);
      } else {
        // A simple path b -> v that avoids a.
        Digraph without(n, gv.edges);
        for (int x = 0; x < n; ++x) {
          without.edges &= ~edge_mask(a, x);
          without.edges &= ~edge_mask(x, a);
        }
        on_path = reach_sets(without)[static_cast<std::size_t>(b)] & node_mask(v);
      }
      if (on_path) e |= edge_mask(a, b);
    }
    profile[static_cast<std::size_t>(v)] = e;
  }
  return profile;
}

bool leq(const std::vector<EdgeSet>& profile_g, const CompleteSet& h) {
  for (int v = 0; v < h.n(); ++v) {
    if (!subset(profile_g[static_cast<std::size_t>(v)], h.part_of(v).graph.edges)) return false;
  }
  return true;
}

bool leq(const CompleteSet& g, const CompleteSet& h) {
  if (g.n() != h.n()) fail(Status::malformed, "node counts differ");
  return leq(path_profile(g), h);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  void unite_all(NodeSet s) {
    if (s == 0) return;
    const int first = min_node(s);
    for (int x : nodes_of(s)) unite(x, first);
  }
};

NodeSet edge_nodes(EdgeSet e) {
  NodeSet s = 0;
  for (int b = 0; b < 64; ++b) {
    if ((e >> b) & 1U) s |= node_mask(b / kMaxNodes) | node_mask(b % kMaxNodes);
  }
  return s;
}

}  // namespace

CompleteSet join(const CompleteSet& g, const CompleteSet& h) {
  if (g.n() != h.n()) fail(Status::malformed, "node counts differ");
  const int n = g.n();
  UnionFind uf(n);
  for (const CompleteSet* x : {&g, &h})
    for (const auto& p : x->parts()) uf.unite_all(p.sink);

  EdgeSet added = 0;
  std::set<EdgeSet> added_cycles;
  for (int iteration = 0; iteration <= n * n + 1; ++iteration) {
    // Step 1: merge relations over the blocks of the current partition.
    std::vector<NodeSet> blocks;
    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
      const int root = uf.find(x);
      if (block_of[static_cast<std::size_t>(root)] == -1) {
        block_of[static_cast<std::size_t>(root)] = static_cast<int>(blocks.size());
        blocks.push_back(0);
      }
      block_of[static_cast<std::size_t>(x)] = block_of[static_cast<std::size_t>(root)];
      blocks[static_cast<std::size_t>(block_of[static_cast<std::size_t>(x)])] |= node_mask(x);
    }
    const std::size_t k = blocks.size();
    std::vector<Digraph> merged(k, Digraph(n));
    std::vector<NodeSet> sinks(k);
    std::vector<EdgeSet> sink_edges(k);
    for (std::size_t b = 0; b < k; ++b) {
      EdgeSet e = added;
      for (int u : nodes_of(blocks[b])) e |= g.part_of(u).graph.edges | h.part_of(u).graph.edges;
      merged[b].edges = e;
      const auto s = sink_components(merged[b]);
      if (s.size() != 1) fail(Status::internal, "join produced a relation without a unique sink");
      sinks[b] = s.front();
      sink_edges[b] = induced(merged[b], sinks[b]).edges;
    }

    // Step 2: cycles that do not sit inside any merged sink.
    std::set<EdgeSet> fresh;
    for (std::size_t b = 0; b < k; ++b) {
      for (const Cycle& c : enumerate_simple_cycles(merged[b])) {
        const EdgeSet ce = cycle_edges(c);
        bool inside = false;
        for (std::size_t j = 0; j < k && !inside; ++j) inside = subset(ce, sink_edges[j]);
        if (!inside) fresh.insert(ce);
      }
    }

    // Step 3: incompatible path pairs force a cycle through both sinks.
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v || block_of[static_cast<std::size_t>(u)] == block_of[static_cast<std::size_t>(v)]) continue;
        const Digraph& iv = merged[static_cast<std::size_t>(block_of[static_cast<std::size_t>(v)])];
        const Digraph& iu = merged[static_cast<std::size_t>(block_of[static_cast<std::size_t>(u)])];
        for (int w = 0; w < n; ++w) {
          if (w == u || w == v) continue;
          const auto qs = simple_paths(iv, w, u);
          if (qs.empty()) continue;
          bool broken = false;
          for (const Path& p : simple_paths(iv, w, v)) {
            if (!subset(p.edges, iu.edges)) continue;
            for (const Path& q : qs) broken = broken || !is_prefix(q, p);
            if (broken) break;
          }
          if (!broken) continue;
          EdgeSet both = 0;
          for (const Path& p : simple_paths(iv, u, v)) both |= p.edges;
          for (const Path& q : simple_paths(iu, v, u)) both |= q.edges;
          for (const Cycle& c : enumerate_simple_cycles(Digraph(n, both))) fresh.insert(cycle_edges(c));
        }
      }
    }

    for (auto it = fresh.begin(); it != fresh.end();) {
      it = added_cycles.count(*it) ? fresh.erase(it) : std::next(it);
    }
    if (fresh.empty()) {
      std::vector<ConnectedRelation> parts;
      for (std::size_t b = 0; b < k; ++b) parts.push_back(ConnectedRelation{merged[b], sinks[b]});
      return CompleteSet(n, std::move(parts));
    }
    for (EdgeSet c : fresh) {
      added_cycles.insert(c);
      added |= c;
      uf.unite_all(edge_nodes(c));
    }
    for (std::size_t b = 0; b < k; ++b) uf.unite_all(sinks[b]);
  }
  fail(Status::internal, "join did not terminate");
}

Decomposition decompose(const CompleteSet& g) {
  Decomposition d;
  for (const auto& p : g.parts()) (p.has_cycle_sink() ? d.cyclic : d.trivial).push_back(p);
  return d;
}

bool is_complete_connected_function(const CompleteSet& g) {
  const auto d = decompose(g);
  if (d.cyclic.size() != 1) return false;
  const auto sink_cycles = enumerate_simple_cycles(d.cyclic.front().sink_subgraph());
  if (sink_cycles.size() != 1) return false;
  const Cycle& c = sink_cycles.front();
  if (cycle_nodes(c) != d.cyclic.front().sink || cycle_edges(c) != d.cyclic.front().sink_subgraph().edges) return false;
  for (const auto& p : g.parts()) {
    if (!is_circled_tree(p.graph)) return false;
    if (!subset(cycle_edges(c), p.graph.edges)) return false;
  }
  return true;
}

std::vector<int> sink_profile(const CompleteSet& g) {
  std::vector<int> sizes;
  for (const auto& p : g.parts()) sizes.push_back(node_count(p.sink));
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

CompleteSet permute(const CompleteSet& g, const std::vector<int>& perm) {
  std::vector<ConnectedRelation> parts;
  for (const auto& p : g.parts()) {
    ConnectedRelation q;
    q.graph = Digraph(g.n());
    for (auto [u, v] : p.graph.edge_list()) q.graph.add(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    for (int u : nodes_of(p.sink)) q.sink |= node_mask(perm[static_cast<std::size_t>(u)]);
    parts.push_back(q);
  }
  return CompleteSet(g.n(), std::move(parts));
}

CompleteSet strip_loops(const CompleteSet& g) {
  EdgeSet loops = 0;
  for (int u = 0; u < g.n(); ++u) loops |= edge_mask(u, u);
  std::vector<ConnectedRelation> parts;
  for (const auto& p : g.parts()) parts.push_back(ConnectedRelation{Digraph(g.n(), p.graph.edges & ~loops), p.sink});
  return CompleteSet(g.n(), std::move(parts));
}

}  // namespace polytrope
