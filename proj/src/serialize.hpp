#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "cones.hpp"
#include "enumerate.hpp"
#include "relations.hpp"
#include "tropical.hpp"

namespace polytrope {

using Json = nlohmann::ordered_json;

// Parsers throw Error(malformed) on bad input and Error(resource_limit) when
// a graph exceeds kMaxNodes.
TropMatrix matrix_from_json(const Json& j);
CompleteSet complete_set_from_json(const Json& j);
Digraph graph_from_json(const Json& j);
Json parse_json_text(const std::string& text);

Json matrix_to_json(const TropMatrix& a);
Json graph_to_json(const Digraph& g);
Json complete_set_to_json(const CompleteSet& g);
Json cone_to_json(const Cone& k);
Json points_to_json(const std::vector<TropPoint>& points);
Json report_to_json(const ValidationReport& r);
Json lattice_to_json(const FaceLattice& lattice);

std::string ntable_to_csv(const std::map<NTableKey, int>& table);
std::string complete_set_to_dot(const CompleteSet& g);
std::string critical_graph_to_dot(const CriticalGraph& cg);

}  // namespace polytrope
