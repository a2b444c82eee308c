#pragma once

#include <vector>

#include "relations.hpp"
#include "tropical.hpp"

namespace polytrope {

struct CriticalGraph {
  Digraph edges;
  std::vector<NodeSet> classes;  // strong components carrying at least one critical edge
};

CriticalGraph critical_graph(const TropMatrix& a);

// The complete set of connected relations indexing the cone that contains a.
CompleteSet classify(const TropMatrix& a);

// Parts of classify(a) whose sink is a critical class.
std::vector<ConnectedRelation> eigen_type(const TropMatrix& a);

}  // namespace polytrope
