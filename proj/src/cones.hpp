#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rational.hpp"
#include "relations.hpp"
#include "tropical.hpp"

namespace polytrope {

// Row-major integer coefficients over the n*n matrix entries.
using Coeffs = std::vector<std::int64_t>;

enum class EqualityTag { path, cycle };

// H-representation: <e, A> = 0 for every equality, <f, A> <= 0 for every inequality.
struct Cone {
  int n = 0;
  std::vector<Coeffs> equalities;
  std::vector<EqualityTag> tags;  // parallel to equalities
  std::vector<Coeffs> inequalities;
};

// In-directed spanning tree given by parent pointers; parent[root] = -1.
struct InTree {
  int root = 0;
  std::vector<int> parent;
};

// Tree rooted at the smallest sink node in which `cycle` (when given) closes
// exactly one non-tree edge. Throws Error(degenerate) if no spanning tree exists.
InTree circled_in_tree(const Digraph& g, NodeSet sink, const Cycle* cycle);

Cone psi(const ConnectedRelation& g);
Cone psi(const ConnectedRelation& g, const Cycle& cycle, const InTree& tree);
Cone psi_complete(const CompleteSet& g);

Cone intersect(const Cone& a, const Cone& b);
void canonicalize(Cone& k);

bool contains(const Cone& k, const TropMatrix& a);
bool strictly_contains(const Cone& k, const TropMatrix& a);

int rank(const std::vector<Coeffs>& rows);
int codim_rank(const Cone& k);
int codim_formula(const CompleteSet& g);

struct EqualityCounts {
  int path = 0;
  int cycle = 0;
};
EqualityCounts equality_counts(const Cone& k);

// Irredundant system: an independent equality basis (cycle-tagged rows first)
// and facet-defining inequalities only.
Cone minimal_representation(const Cone& k);

// Integer matrix with first row zero meeting every equality and every
// inequality strictly. Throws Error(degenerate) if no such point exists.
TropMatrix interior_point(const Cone& k);
std::vector<TropMatrix> sample_interior_points(const Cone& k, int count, std::mt19937_64& rng);

bool cone_contains(const Cone& outer, const Cone& inner);
bool cone_equal(const Cone& a, const Cone& b);

Rational cycle_polytope_support(const TropMatrix& a);

}  // namespace polytrope
