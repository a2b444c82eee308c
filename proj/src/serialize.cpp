#include "serialize.hpp"

#include <sstream>

#include "errors.hpp"

namespace polytrope {

namespace {

int read_n(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
    fail(Status::malformed, "expected an object with integer field \"n\"");
  }
  const int n = j.at("n").get<int>();
  if (n < 1) fail(Status::malformed, "\"n\" must be positive");
  return n;
}

Rational read_entry(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.dump());
  fail(Status::malformed, "matrix entries must be strings \"p/q\" or integers");
}

EdgeSet read_edges(const Json& edges, int n) {
  if (!edges.is_array()) fail(Status::malformed, "\"edges\" must be an array");
  if (n > kMaxNodes) fail(Status::resource_limit, "graphs are limited to " + std::to_string(kMaxNodes) + " nodes");
  EdgeSet e = 0;
  for (const auto& pair : edges) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      fail(Status::malformed, "each edge must be a pair [u, v]");
    }
    const int u = pair[0].get<int>();
    const int v = pair[1].get<int>();
    if (u < 1 || u > n || v < 1 || v > n) fail(Status::malformed, "edge endpoint out of range 1..n");
    e |= edge_mask(u - 1, v - 1);
  }
  return e;
}

Json edges_to_json(const Digraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edge_list()) edges.push_back({u + 1, v + 1});
  return edges;
}

Json nodes_to_json(NodeSet s) {
  Json out = Json::array();
  for (int u : nodes_of(s)) out.push_back(u + 1);
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Status::malformed, std::string("invalid JSON: ") + e.what());
  }
}

TropMatrix matrix_from_json(const Json& j) {
  const int n = read_n(j);
  if (!j.contains("entries") || !j.at("entries").is_array() || static_cast<int>(j.at("entries").size()) != n) {
    fail(Status::malformed, "\"entries\" must be an array of n rows");
  }
  TropMatrix a(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = j.at("entries")[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) fail(Status::malformed, "every row must have n entries");
    for (int k = 0; k < n; ++k) a(i, k) = read_entry(row[static_cast<std::size_t>(k)]);
  }
  return a;
}

Digraph graph_from_json(const Json& j) {
  const int n = read_n(j);
  if (!j.contains("edges")) fail(Status::malformed, "missing \"edges\"");
  const EdgeSet e = read_edges(j.at("edges"), n);
  return Digraph(n, e);
}

CompleteSet complete_set_from_json(const Json& j) {
  const int n = read_n(j);
  if (!j.contains("parts") || !j.at("parts").is_array()) fail(Status::malformed, "missing \"parts\" array");
  std::vector<Digraph> graphs;
  for (const auto& part : j.at("parts")) {
    if (!part.is_object() || !part.contains("edges")) fail(Status::malformed, "each part needs \"edges\"");
    graphs.emplace_back(n, read_edges(part.at("edges"), n));
  }
  return CompleteSet::from_graphs(n, graphs);
}

Json matrix_to_json(const TropMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.size(); ++j) row.push_back(format_rational(a(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", a.size()}, {"entries", std::move(rows)}};
}

Json graph_to_json(const Digraph& g) { return Json{{"n", g.n}, {"edges", edges_to_json(g)}}; }

Json complete_set_to_json(const CompleteSet& g) {
  Json parts = Json::array();
  for (const auto& p : g.parts()) parts.push_back(Json{{"sink", nodes_to_json(p.sink)}, {"edges", edges_to_json(p.graph)}});
  return Json{{"n", g.n()}, {"parts", std::move(parts)}};
}

Json cone_to_json(const Cone& k) {
  Json eq = Json::array();
  Json tags = Json::array();
  Json ineq = Json::array();
  for (std::size_t i = 0; i < k.equalities.size(); ++i) {
    eq.push_back(k.equalities[i]);
    tags.push_back(k.tags[i] == EqualityTag::cycle ? "CYCLE" : "PATH");
  }
  for (const auto& f : k.inequalities) ineq.push_back(f);
  return Json{{"n", k.n}, {"equalities", std::move(eq)}, {"inequalities", std::move(ineq)}, {"tags", std::move(tags)}};
}

Json points_to_json(const std::vector<TropPoint>& points) {
  Json out = Json::array();
  for (const auto& p : points) {
    Json row = Json::array();
    for (const auto& x : p) row.push_back(format_rational(x));
    out.push_back(std::move(row));
  }
  return out;
}

Json report_to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json witness = Json::array();
    for (int w : v.witness) witness.push_back(w + 1);
    violations.push_back(Json{{"clause", std::string(1, v.clause)}, {"message", v.message}, {"witness", witness}});
  }
  return Json{{"valid", r.ok}, {"violations", std::move(violations)}};
}

Json lattice_to_json(const FaceLattice& lattice) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
    Json e = complete_set_to_json(lattice.elements[i]);
    Json lambda = Json::array();
    for (int s : sink_profile(lattice.elements[i])) lambda.push_back(s);
    Json out{{"id", i},
             {"codim", lattice.codim[i]},
             {"lambda", std::move(lambda)},
             {"p", lattice.counts[i].path},
             {"c", lattice.counts[i].cycle},
             {"parts", e.at("parts")}};
    elements.push_back(std::move(out));
  }
  Json order = Json::array();
  for (auto [i, j] : order_pairs(lattice)) order.push_back({i, j});
  return Json{{"n", lattice.n}, {"f_vector", f_vector(lattice)}, {"elements", std::move(elements)}, {"order", std::move(order)}};
}

std::string ntable_to_csv(const std::map<NTableKey, int>& table) {
  std::ostringstream os;
  os << "codim,lambda,p,c,count\n";
  for (const auto& [key, count] : table) {
    os << key.codim << ",";
    for (std::size_t i = 0; i < key.lambda.size(); ++i) os << (i ? " " : "") << key.lambda[i];
    os << ",";
    if (key.p >= 0) os << key.p;
    os << ",";
    if (key.c >= 0) os << key.c;
    os << "," << count << "\n";
  }
  return os.str();
}

std::string complete_set_to_dot(const CompleteSet& g) {
  std::ostringstream os;
  os << "digraph complete_set {\n";
  for (std::size_t i = 0; i < g.parts().size(); ++i) {
    const auto& p = g.parts()[i];
    os << "  subgraph cluster_" << i << " {\n    label=\"sink {";
    bool first = true;
    for (int u : nodes_of(p.sink)) {
      os << (first ? "" : ",") << (u + 1);
      first = false;
    }
    os << "}\";\n";
    for (int u = 0; u < g.n(); ++u) os << "    p" << i << "_" << (u + 1) << " [label=\"" << (u + 1) << "\"];\n";
    for (auto [u, v] : p.graph.edge_list()) {
      const bool inside = (p.sink & node_mask(u)) && (p.sink & node_mask(v));
      os << "    p" << i << "_" << (u + 1) << " -> p" << i << "_" << (v + 1) << (inside ? " [color=red]" : "") << ";\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string critical_graph_to_dot(const CriticalGraph& cg) { return to_dot(cg.edges, "critical"); }

}  // namespace polytrope
