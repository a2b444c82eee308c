#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polytrope {

// Graphs carry at most kMaxNodes nodes so that an edge set fits in one word.
inline constexpr int kMaxNodes = 8;

using NodeSet = std::uint32_t;
using EdgeSet = std::uint64_t;

constexpr int edge_bit(int u, int v) { return u * kMaxNodes + v; }
constexpr EdgeSet edge_mask(int u, int v) { return EdgeSet{1} << edge_bit(u, v); }
constexpr NodeSet node_mask(int u) { return NodeSet{1} << u; }
inline int min_node(NodeSet s) { return std::countr_zero(s); }
inline int node_count(NodeSet s) { return std::popcount(s); }
inline bool subset(EdgeSet a, EdgeSet b) { return (a & ~b) == 0; }

std::vector<int> nodes_of(NodeSet s);

// Directed graph on nodes 0..n-1; self-loops allowed, no multi-edges.
struct Digraph {
  int n = 0;
  EdgeSet edges = 0;

  Digraph() = default;
  Digraph(int nodes, EdgeSet e = 0);

  bool has(int u, int v) const { return (edges >> edge_bit(u, v)) & 1U; }
  void add(int u, int v) { edges |= edge_mask(u, v); }
  int edge_count() const { return std::popcount(edges); }
  NodeSet out(int u) const;
  NodeSet in(int v) const;
  std::vector<std::pair<int, int>> edge_list() const;

  static Digraph complete(int n, bool loops);

  auto operator<=>(const Digraph&) const = default;
};

// Nodes are blocks of a partition; parallel edges are kept.
struct MultiGraph {
  struct Edge {
    int id = 0;
    int source = 0;  // block index
    int target = 0;  // block index
    int u = 0;       // original endpoints
    int v = 0;
  };
  std::vector<NodeSet> blocks;
  std::vector<Edge> edges;
};

struct Path {
  std::vector<int> nodes;
  EdgeSet edges = 0;
};

// Node sequence with the smallest node first; the closing edge is implicit.
using Cycle = std::vector<int>;

Digraph induced(const Digraph& g, NodeSet nodes);
std::vector<NodeSet> reach_sets(const Digraph& g);  // reflexive
std::vector<NodeSet> strong_components(const Digraph& g);
std::vector<NodeSet> sink_components(const Digraph& g);
MultiGraph contraction(const Digraph& g, const std::vector<NodeSet>& blocks, bool keep_internal = false);
Digraph rooted_subgraph(const Digraph& g, int u);

std::vector<Cycle> enumerate_simple_cycles(const Digraph& g);
EdgeSet cycle_edges(const Cycle& c);
NodeSet cycle_nodes(const Cycle& c);

std::vector<Digraph> enumerate_in_trees(const Digraph& g, int root);

// Simple paths s -> t; for s == t the simple cycles through s.
std::vector<Path> simple_paths(const Digraph& g, int s, int t);

bool is_circled_tree(const Digraph& g);
bool is_connected_relation(const Digraph& g);

std::string to_dot(const Digraph& g, std::string_view name);

}  // namespace polytrope
