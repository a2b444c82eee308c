#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "relations.hpp"
#include "tropical.hpp"

namespace testing {

// Rows of "p/q" strings or integers.
inline polytrope::TropMatrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<polytrope::Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (const char* x : row) r.back().push_back(polytrope::parse_rational(x));
  }
  return polytrope::TropMatrix::from_rows(r);
}

inline polytrope::TropMatrix zero(int n) {
  polytrope::TropMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0;
  return a;
}

// Edges are 1-indexed, as in the JSON formats.
inline polytrope::Digraph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  polytrope::Digraph g(n);
  for (auto [u, v] : edges) g.add(u - 1, v - 1);
  return g;
}

inline polytrope::NodeSet nodes(std::initializer_list<int> list) {
  polytrope::NodeSet s = 0;
  for (int u : list) s |= polytrope::node_mask(u - 1);
  return s;
}

inline polytrope::TropPoint point(std::initializer_list<const char*> xs) {
  polytrope::TropPoint p;
  for (const char* x : xs) p.push_back(polytrope::parse_rational(x));
  return p;
}

// The n=2 complete sets that recur across modules.
inline polytrope::CompleteSet loop1() {
  return polytrope::CompleteSet::from_graphs(2, {graph(2, {{1, 1}, {2, 1}}), graph(2, {{1, 1}, {1, 2}})});
}

inline polytrope::CompleteSet loop2() {
  return polytrope::CompleteSet::from_graphs(2, {graph(2, {{2, 2}, {2, 1}}), graph(2, {{2, 2}, {1, 2}})});
}

inline polytrope::CompleteSet two_cycle() {
  return polytrope::CompleteSet::from_graphs(2, {graph(2, {{1, 2}, {2, 1}})});
}

inline polytrope::CompleteSet two_loops() {
  return polytrope::CompleteSet::from_graphs(
      2, {graph(2, {{1, 1}, {2, 2}, {2, 1}}), graph(2, {{1, 1}, {2, 2}, {1, 2}})});
}

inline polytrope::CompleteSet golden3() {
  return polytrope::CompleteSet::from_graphs(
      3, {graph(3, {{1, 2}, {2, 1}, {3, 1}}), graph(3, {{1, 2}, {2, 1}, {2, 3}})});
}

}  // namespace testing
