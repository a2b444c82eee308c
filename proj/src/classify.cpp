#include "classify.hpp"

#include "errors.hpp"

namespace polytrope {

namespace {

struct Normalized {
  TropMatrix bar;
  TropMatrix star;
};

Normalized normalized(const TropMatrix& a) {
  if (a.size() > kMaxNodes) fail(Status::resource_limit, "classification is limited to " + std::to_string(kMaxNodes) + " nodes");
  Normalized m{normalize(a), TropMatrix()};
  m.star = kleene_star(m.bar);
  return m;
}

CriticalGraph critical_from(const Normalized& m) {
  const int n = m.bar.size();
  CriticalGraph cg;
  cg.edges = Digraph(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (sgn(m.bar(u, v) + m.star(v, u)) == 0) cg.edges.add(u, v);
  for (NodeSet comp : strong_components(cg.edges)) {
    if (induced(cg.edges, comp).edges != 0) cg.classes.push_back(comp);
  }
  return cg;
}

EdgeSet optimal_edges_into(const Normalized& m, int r) {
  const int n = m.bar.size();
  EdgeSet e = 0;
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (m.bar(u, w) + m.star(w, r) == m.star(u, r)) e |= edge_mask(u, w);
  return e;
}

}  // namespace

CriticalGraph critical_graph(const TropMatrix& a) { return critical_from(normalized(a)); }

CompleteSet classify(const TropMatrix& a) {
  const Normalized m = normalized(a);
  const int n = a.size();
  const CriticalGraph cg = critical_from(m);
  std::vector<NodeSet> sinks = cg.classes;
  NodeSet critical = 0;
  for (NodeSet c : cg.classes) critical |= c;
  for (int j = 0; j < n; ++j)
    if (!(critical & node_mask(j))) sinks.push_back(node_mask(j));

  std::vector<ConnectedRelation> parts;
  for (NodeSet s : sinks) {
    const EdgeSet e = optimal_edges_into(m, min_node(s));
    for (int r : nodes_of(s)) {
      if (optimal_edges_into(m, r) != e) fail(Status::internal, "part depends on the sink representative");
    }
    parts.push_back(ConnectedRelation{Digraph(n, e), s});
  }
  return CompleteSet(n, std::move(parts));
}

std::vector<ConnectedRelation> eigen_type(const TropMatrix& a) { return decompose(classify(a)).cyclic; }

}  // namespace polytrope
