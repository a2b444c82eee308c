#include "oracle.hpp"

#include <algorithm>
#include <random>

#include "classify.hpp"
#include "cones.hpp"
#include "errors.hpp"

namespace polytrope::oracle {

namespace {

void guard(const TropMatrix& a, int limit, const char* what) {
  if (a.size() > limit) fail(Status::resource_limit, std::string(what) + " is limited to n <= " + std::to_string(limit));
}

std::vector<TropPoint> vertex_columns(const TropMatrix& a) {
  const TropMatrix star = kleene_star(normalize(a));
  std::vector<TropPoint> cols;
  for (int j = 0; j < a.size(); ++j) cols.push_back(canonical_point(column(star, j)));
  return cols;
}

std::string show(const TropMatrix& a) {
  std::string s = "[";
  for (int i = 0; i < a.size(); ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < a.size(); ++j) s += (j ? "," : "") + format_rational(a(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace

Rational bf_eigenvalue(const TropMatrix& a) {
  guard(a, 6, "brute-force eigenvalue");
  const int n = a.size();
  std::optional<Rational> best;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1U << i)) nodes.push_back(i);
    // Fix the smallest node first; permute the rest.
    do {
      Rational w = 0;
      for (std::size_t i = 0; i < nodes.size(); ++i) w += a(nodes[i], nodes[(i + 1) % nodes.size()]);
      w /= static_cast<long>(nodes.size());
      if (!best || w > *best) best = w;
    } while (std::next_permutation(nodes.begin() + 1, nodes.end()));
  }
  return *best;
}

Rational bf_longest_path(const TropMatrix& a, int u, int v) {
  guard(a, 5, "brute-force longest path");
  if (bf_eigenvalue(a) > 0) fail(Status::positive_cycle, "matrix has a positive cycle");
  const int n = a.size();
  std::optional<Rational> best;
  if (u == v) best = Rational(0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int x, const Rational& w) -> void {
    for (int y = 0; y < n; ++y) {
      const Rational next = w + a(x, y);
      if (y == v) {
        if (!best || next > *best) best = next;
      } else if (!used[static_cast<std::size_t>(y)]) {
        used[static_cast<std::size_t>(y)] = true;
        self(self, y, next);
        used[static_cast<std::size_t>(y)] = false;
      }
    }
  };
  used[static_cast<std::size_t>(u)] = true;
  rec(rec, u, Rational(0));
  return *best;
}

LinearityReport bf_linearity_pair(const TropMatrix& a1, const TropMatrix& a2) {
  LinearityReport report;
  report.pairs = 1;
  const auto v1 = vertex_columns(a1);
  const auto v2 = vertex_columns(a2);
  const int n = a1.size();
  for (const Rational& t : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
    TropMatrix at(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) at(i, j) = t * a1(i, j) + (1 - t) * a2(i, j);
    const auto vt = vertex_columns(at);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const Rational expect = t * v1[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] +
                                (1 - t) * v2[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        if (vt[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != expect) {
          report.pass = false;
          report.detail = "vertex " + std::to_string(j + 1) + " is not affine at t=" + format_rational(t) + " between " +
                          show(a1) + " and " + show(a2);
          report.a1 = a1;
          report.a2 = a2;
          return report;
        }
      }
    }
  }
  return report;
}

LinearityReport bf_linearity_check(const CompleteSet& g, int pairs, std::uint64_t seed) {
  LinearityReport report;
  const Cone k = psi_complete(g);
  if (!k.equalities.empty()) {
    report.pass = false;
    report.detail = "cone is not full-dimensional";
    return report;
  }
  std::mt19937_64 rng(seed);
  const auto samples = sample_interior_points(k, 2 * pairs, rng);
  for (const auto& a : samples) {
    if (classify(a) != g) {
      report.pass = false;
      report.detail = "sample " + show(a) + " left the cone";
      report.a1 = a;
      return report;
    }
  }
  for (int p = 0; p < pairs; ++p) {
    auto r = bf_linearity_pair(samples[static_cast<std::size_t>(2 * p)], samples[static_cast<std::size_t>(2 * p + 1)]);
    ++report.pairs;
    if (!r.pass) {
      r.pairs = report.pairs;
      return r;
    }
  }
  return report;
}

LpLongestPath bf_lp_longest_path(const TropMatrix& a, int target) {
  guard(a, 4, "brute-force longest-path LP");
  if (bf_eigenvalue(a) > 0) fail(Status::positive_cycle, "matrix has a positive cycle");
  const int n = a.size();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  LpLongestPath best;
  bool found = false;

  auto evaluate = [&] {
    std::vector<Rational> value(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      int x = s;
      Rational w = 0;
      for (int steps = 0; x != target; ++steps) {
        if (steps > n) return;  // parent pointers contain a cycle
        w += a(x, parent[static_cast<std::size_t>(x)]);
        x = parent[static_cast<std::size_t>(x)];
      }
      value[static_cast<std::size_t>(s)] = w;
    }
    Rational objective = 0;
    for (const auto& v : value) objective += v;
    Digraph tree(n);
    for (int s = 0; s < n; ++s)
      if (s != target) tree.add(s, parent[static_cast<std::size_t>(s)]);
    if (!found || objective > best.objective) {
      best.objective = objective;
      best.values = value;
      best.optimal_trees = {tree};
      found = true;
    } else if (objective == best.objective) {
      best.optimal_trees.push_back(tree);
    }
  };
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      evaluate();
      return;
    }
    if (x == target) {
      self(self, x + 1);
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      parent[static_cast<std::size_t>(x)] = y;
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace polytrope::oracle
