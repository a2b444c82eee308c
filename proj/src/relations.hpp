#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "digraph.hpp"

namespace polytrope {

// A graph together with its unique sink component (0 when the sink is not unique).
struct ConnectedRelation {
  Digraph graph;
  NodeSet sink = 0;

  Digraph sink_subgraph() const { return induced(graph, sink); }
  bool has_cycle_sink() const { return sink_subgraph().edges != 0; }

  auto operator<=>(const ConnectedRelation&) const = default;
};

ConnectedRelation make_relation(const Digraph& g);

// Parts are kept sorted by their smallest sink node; equality is structural.
class CompleteSet {
 public:
  CompleteSet() = default;
  CompleteSet(int n, std::vector<ConnectedRelation> parts);

  static CompleteSet from_graphs(int n, const std::vector<Digraph>& graphs);

  int n() const noexcept { return n_; }
  const std::vector<ConnectedRelation>& parts() const noexcept { return parts_; }
  int owner(int u) const { return owner_[static_cast<std::size_t>(u)]; }
  const ConnectedRelation& part_of(int u) const;

  bool operator==(const CompleteSet& other) const { return n_ == other.n_ && parts_ == other.parts_; }
  std::strong_ordering operator<=>(const CompleteSet& other) const;

 private:
  int n_ = 0;
  std::vector<ConnectedRelation> parts_;
  std::vector<int> owner_;
};

struct CompleteSetHash {
  std::size_t operator()(const CompleteSet& g) const noexcept;
};

struct Violation {
  char clause = ' ';  // 'p' (a part on its own), 'a', 'b' or 'c'
  std::string message;
  std::vector<int> witness;  // 0-indexed nodes or part indices, see message
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate_complete(const CompleteSet& g);

// Contraction and path conditions for the ordered pair (gi, gj), with the
// contraction taken over the partition `blocks` of all sinks.
std::optional<Violation> check_part_pair(const ConnectedRelation& gi, const ConnectedRelation& gj,
                                         const std::vector<NodeSet>& blocks);

// For each v, the edges of G(v) lying on a simple path into v or a simple cycle through v.
std::vector<EdgeSet> path_profile(const CompleteSet& g);
bool leq(const std::vector<EdgeSet>& profile_g, const CompleteSet& h);
bool leq(const CompleteSet& g, const CompleteSet& h);

CompleteSet join(const CompleteSet& g, const CompleteSet& h);

struct Decomposition {
  std::vector<ConnectedRelation> cyclic;  // sinks carrying at least one edge
  std::vector<ConnectedRelation> trivial;  // edgeless singleton sinks
};

Decomposition decompose(const CompleteSet& g);
bool is_complete_connected_function(const CompleteSet& g);

// Sink sizes in non-increasing order.
std::vector<int> sink_profile(const CompleteSet& g);

CompleteSet permute(const CompleteSet& g, const std::vector<int>& perm);
CompleteSet strip_loops(const CompleteSet& g);

}  // namespace polytrope
