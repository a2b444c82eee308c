#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relations.hpp"
#include "tropical.hpp"

// Brute-force references. They share no code path with the fast routines
// they check, and every one of them has a hard size guard.
namespace polytrope::oracle {

// Maximum mean over all simple cycles, found by permutation search. n <= 6.
Rational bf_eigenvalue(const TropMatrix& a);

// Best simple path u -> v (0 allowed when u == v). n <= 5, no positive cycle.
Rational bf_longest_path(const TropMatrix& a, int u, int v);

struct LinearityReport {
  bool pass = true;
  int pairs = 0;
  std::string detail;
  std::optional<TropMatrix> a1;
  std::optional<TropMatrix> a2;
};

// Samples strict interior pairs of the open cone of g and checks that the
// normalized star columns (one vertex per column label) are affine along the
// segment at t = 1/3, 1/2, 2/3.
LinearityReport bf_linearity_check(const CompleteSet& g, int pairs, std::uint64_t seed);
LinearityReport bf_linearity_pair(const TropMatrix& a1, const TropMatrix& a2);

struct LpLongestPath {
  std::vector<Rational> values;        // per source node
  std::vector<Digraph> optimal_trees;  // every in-tree attaining the optimum
  Rational objective;
};

// Single-target longest-path LP solved by enumerating its vertices, the
// in-directed spanning trees rooted at `target`. n <= 4, no positive cycle.
LpLongestPath bf_lp_longest_path(const TropMatrix& a, int target);

}  // namespace polytrope::oracle
