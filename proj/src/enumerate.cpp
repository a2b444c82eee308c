#include "enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "classify.hpp"
#include "errors.hpp"
#include "parallel.hpp"

namespace polytrope {

namespace {

// Circled trees carrying cycle c whose unique sink is `sink`: every node off
// the cycle (and outside the sink) picks one successor; when the sink is not
// the cycle, one cycle node also picks an exit.
std::vector<ConnectedRelation> circled_candidates(int n, const Cycle& c, NodeSet sink) {
  const NodeSet on_cycle = cycle_nodes(c);
  const EdgeSet base = cycle_edges(c);
  const NodeSet all = (NodeSet{1} << n) - 1;
  const std::vector<int> free_nodes = nodes_of(all & ~on_cycle & ~sink);
  const bool needs_exit = sink != on_cycle;

  std::vector<std::pair<int, int>> exits;
  if (needs_exit) {
    for (int e : nodes_of(on_cycle))
      for (int t : nodes_of(all & ~on_cycle)) exits.emplace_back(e, t);
  } else {
    exits.emplace_back(-1, -1);
  }

  std::set<EdgeSet> seen;
  std::vector<ConnectedRelation> out;
  std::vector<int> succ(free_nodes.size());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == free_nodes.size()) {
      for (auto [e, t] : exits) {
        Digraph g(n, base);
        for (std::size_t i = 0; i < free_nodes.size(); ++i) g.add(free_nodes[i], succ[i]);
        if (e >= 0) g.add(e, t);
        if (seen.count(g.edges)) continue;
        const auto sinks = sink_components(g);
        if (sinks.size() != 1 || sinks.front() != sink) continue;
        if (enumerate_simple_cycles(g).size() != 1) continue;
        seen.insert(g.edges);
        out.push_back(ConnectedRelation{g, sink});
      }
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (y == free_nodes[k]) continue;
      succ[k] = y;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<CompleteSet> ccf_for_cycle(int n, const Cycle& c) {
  const NodeSet on_cycle = cycle_nodes(c);
  std::vector<NodeSet> blocks{on_cycle};
  for (int j = 0; j < n; ++j)
    if (!(on_cycle & node_mask(j))) blocks.push_back(node_mask(j));
  std::vector<std::vector<ConnectedRelation>> cands;
  for (NodeSet s : blocks) cands.push_back(circled_candidates(n, c, s));

  std::vector<CompleteSet> out;
  std::vector<ConnectedRelation> chosen;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == blocks.size()) {
      CompleteSet g(n, chosen);
      if (validate_complete(g).ok && is_complete_connected_function(g)) out.push_back(std::move(g));
      return;
    }
    for (const auto& cand : cands[k]) {
      bool ok = true;
      for (const auto& prev : chosen) {
        if (check_part_pair(prev, cand, blocks) || check_part_pair(cand, prev, blocks)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(cand);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<CompleteSet> enumerate_ccf(int n, int threads) {
  if (n < 1) fail(Status::malformed, "n must be positive");
  if (n > 4) fail(Status::resource_limit, "open-cone enumeration is limited to n <= 4");
  const auto cycles = enumerate_simple_cycles(Digraph::complete(n, true));
  std::vector<std::vector<CompleteSet>> per_cycle(cycles.size());
  parallel_for(cycles.size(), threads, [&](std::size_t i) { per_cycle[i] = ccf_for_cycle(n, cycles[i]); });
  std::vector<CompleteSet> all;
  for (auto& v : per_cycle) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

int FaceLattice::index_of(const CompleteSet& g) const {
  // Elements are sorted by (codim, element); the codim of g is not known here.
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return static_cast<int>(i);
  return -1;
}

FaceLattice face_lattice(int n, int threads) {
  if (n < 1) fail(Status::malformed, "n must be positive");
  if (n > 3) fail(Status::resource_limit, "face-lattice closure is limited to n <= 3");
  const auto gens = enumerate_ccf(n, threads);

  std::unordered_set<CompleteSet, CompleteSetHash> seen(gens.begin(), gens.end());
  std::vector<CompleteSet> elements = gens;
  std::vector<CompleteSet> frontier = gens;
  while (!frontier.empty()) {
    std::vector<CompleteSet> joined(frontier.size() * gens.size());
    parallel_for(frontier.size(), threads, [&](std::size_t i) {
      for (std::size_t g = 0; g < gens.size(); ++g) joined[i * gens.size() + g] = join(frontier[i], gens[g]);
    });
    std::vector<CompleteSet> next;
    for (auto& j : joined) {
      if (seen.insert(j).second) {
        elements.push_back(j);
        next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }

  std::vector<int> codim(elements.size());
  std::vector<EqualityCounts> counts(elements.size());
  parallel_for(elements.size(), threads, [&](std::size_t i) {
    const Cone k = psi_complete(elements[i]);
    counts[i] = equality_counts(k);
    codim[i] = counts[i].path + counts[i].cycle;
  });
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (codim[a] != codim[b]) return codim[a] < codim[b];
    return elements[a] < elements[b];
  });

  FaceLattice lattice;
  lattice.n = n;
  for (std::size_t i : order) {
    lattice.elements.push_back(elements[i]);
    lattice.codim.push_back(codim[i]);
    lattice.counts.push_back(counts[i]);
    lattice.profiles.push_back(path_profile(elements[i]));
  }
  return lattice;
}

std::vector<int> f_vector(const FaceLattice& lattice) {
  const int top = lattice.n * (lattice.n - 1);
  std::vector<int> f(static_cast<std::size_t>(top + 1), 0);
  for (int c : lattice.codim) {
    if (c < 0 || c > top) fail(Status::internal, "codimension out of range");
    ++f[static_cast<std::size_t>(c)];
  }
  return f;
}

std::vector<std::pair<int, int>> order_pairs(const FaceLattice& lattice) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < lattice.elements.size(); ++i)
    for (std::size_t j = 0; j < lattice.elements.size(); ++j)
      if (i != j && lattice.leq(i, j)) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

std::map<NTableKey, int> n_table(const FaceLattice& lattice) {
  std::map<NTableKey, int> table;
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    NTableKey key;
    key.codim = lattice.codim[i];
    key.lambda = sink_profile(lattice.elements[i]);
    if (key.lambda.size() > 1) {
      key.p = lattice.counts[i].path;
      key.c = lattice.counts[i].cycle;
    }
    ++table[key];
  }
  return table;
}

CompleteSet edge_reversal(const CompleteSet& g) {
  return classify(interior_point(psi_complete(g)).transpose());
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

ReversalWitness edge_reversal_fixed(const CompleteSet& g) {
  const CompleteSet reversed = strip_loops(edge_reversal(g));
  const CompleteSet base = strip_loops(g);
  for (const auto& perm : permutations(g.n())) {
    if (permute(base, perm) == reversed) return ReversalWitness{true, perm};
  }
  return ReversalWitness{false, {}};
}

std::vector<std::vector<CompleteSet>> orbits(const std::vector<CompleteSet>& elements, bool include_reversal,
                                             bool ignore_loops, int threads) {
  auto key_of = [&](const CompleteSet& g) { return ignore_loops ? strip_loops(g) : g; };
  std::vector<CompleteSet> keys;
  for (const auto& g : elements) keys.push_back(key_of(g));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::unordered_map<CompleteSet, int, CompleteSetHash> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], static_cast<int>(i));

  std::vector<int> parent(keys.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };

  std::vector<CompleteSet> reversed(elements.size());
  if (include_reversal) {
    parallel_for(elements.size(), threads, [&](std::size_t i) { reversed[i] = key_of(edge_reversal(elements[i])); });
  }
  const auto perms = permutations(elements.empty() ? 1 : elements.front().n());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const int self = index.at(key_of(elements[i]));
    for (const auto& perm : perms) {
      auto it = index.find(key_of(permute(elements[i], perm)));
      if (it != index.end()) unite(self, it->second);
    }
    if (include_reversal) {
      auto it = index.find(reversed[i]);
      if (it != index.end()) unite(self, it->second);
    }
  }

  std::map<int, std::vector<CompleteSet>> groups;
  for (std::size_t i = 0; i < keys.size(); ++i) groups[find(static_cast<int>(i))].push_back(keys[i]);
  std::vector<std::vector<CompleteSet>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace polytrope
