#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "cones.hpp"
#include "relations.hpp"

namespace polytrope {

// All complete connected functions (the open cones). Requires 1 <= n <= 4.
std::vector<CompleteSet> enumerate_ccf(int n, int threads = 1);

struct FaceLattice {
  int n = 0;
  std::vector<CompleteSet> elements;  // sorted by (codim, element)
  std::vector<int> codim;
  std::vector<EqualityCounts> counts;
  std::vector<std::vector<EdgeSet>> profiles;  // path_profile per element

  bool leq(std::size_t i, std::size_t j) const { return polytrope::leq(profiles[i], elements[j]); }
  int index_of(const CompleteSet& g) const;  // -1 when absent
};

// Join-closure of the complete connected functions. Requires 1 <= n <= 3.
FaceLattice face_lattice(int n, int threads = 1);

std::vector<int> f_vector(const FaceLattice& lattice);
std::vector<std::pair<int, int>> order_pairs(const FaceLattice& lattice);

struct NTableKey {
  int codim = 0;
  std::vector<int> lambda;  // sink sizes, non-increasing
  int p = -1;               // -1 when merged (single sink)
  int c = -1;
  auto operator<=>(const NTableKey&) const = default;
};

std::map<NTableKey, int> n_table(const FaceLattice& lattice);

// Image under reversal of all edges, realized by transposing an interior point.
CompleteSet edge_reversal(const CompleteSet& g);

struct ReversalWitness {
  bool fixed = false;
  std::vector<int> permutation;  // sigma with reversal(G) = sigma(G), self-loops ignored
};

ReversalWitness edge_reversal_fixed(const CompleteSet& g);

// Orbits of the node-relabeling action (and optionally edge reversal). With
// ignore_loops the orbit members are the loop-free keys of the elements.
std::vector<std::vector<CompleteSet>> orbits(const std::vector<CompleteSet>& elements, bool include_reversal,
                                             bool ignore_loops, int threads = 1);

std::vector<std::vector<int>> permutations(int n);

}  // namespace polytrope
