#include "cones.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "errors.hpp"
#include "lp.hpp"

namespace polytrope {

namespace {

using RowQ = std::vector<Rational>;

std::vector<std::pair<int, int>> tree_path(const InTree& t, int u) {
  std::vector<std::pair<int, int>> path;
  while (u != t.root) {
    const int p = t.parent[static_cast<std::size_t>(u)];
    path.emplace_back(u, p);
    u = p;
  }
  return path;
}

bool in_tree(const InTree& t, int u, int v) { return u != t.root && t.parent[static_cast<std::size_t>(u)] == v; }

// L * (A_uv + A(T_v) - A(T_u)) - (1 + |T_v| - |T_u|) * A(C), i.e. the relation
// with lambda replaced by the mean of the reference cycle C.
Coeffs tree_form(int n, int u, int v, const InTree& t, const Cycle& ref) {
  const auto len = static_cast<std::int64_t>(ref.size());
  Coeffs co(static_cast<std::size_t>(n * n), 0);
  co[static_cast<std::size_t>(u * n + v)] += len;
  const auto tv = tree_path(t, v);
  const auto tu = tree_path(t, u);
  for (auto [a, b] : tv) co[static_cast<std::size_t>(a * n + b)] += len;
  for (auto [a, b] : tu) co[static_cast<std::size_t>(a * n + b)] -= len;
  const auto m = 1 + static_cast<std::int64_t>(tv.size()) - static_cast<std::int64_t>(tu.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const int a = ref[i];
    const int b = ref[(i + 1) % ref.size()];
    co[static_cast<std::size_t>(a * n + b)] -= m;
  }
  return co;
}

// Divides by the gcd; equalities get a positive leading coefficient.
bool normalize_form(Coeffs& co, bool equality) {
  std::int64_t g = 0;
  for (auto c : co) g = std::gcd(g, c < 0 ? -c : c);
  if (g == 0) return false;
  for (auto& c : co) c /= g;
  if (equality) {
    const auto lead = std::find_if(co.begin(), co.end(), [](std::int64_t c) { return c != 0; });
    if (*lead < 0)
      for (auto& c : co) c = -c;
  }
  return true;
}

struct FormCollector {
  std::map<Coeffs, EqualityTag> equalities;
  std::vector<Coeffs> inequalities;

  void add(Coeffs co, bool equality, EqualityTag tag) {
    if (!normalize_form(co, equality)) return;
    if (!equality) {
      inequalities.push_back(std::move(co));
      return;
    }
    auto [it, inserted] = equalities.emplace(std::move(co), tag);
    if (!inserted && tag == EqualityTag::cycle) it->second = EqualityTag::cycle;
  }

  Cone finish(int n) {
    Cone k;
    k.n = n;
    for (auto& [co, tag] : equalities) {
      k.equalities.push_back(co);
      k.tags.push_back(tag);
    }
    k.inequalities = std::move(inequalities);
    canonicalize(k);
    return k;
  }
};

const Cycle* first_cycle_within(const std::vector<Cycle>& cycles, NodeSet nodes) {
  for (const Cycle& c : cycles) {
    if ((cycle_nodes(c) & ~nodes) == 0) return &c;
  }
  return nullptr;
}

Rational dot(const Coeffs& co, const TropMatrix& a) {
  const int n = a.size();
  Rational s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (co[static_cast<std::size_t>(i * n + j)] != 0) s += a(i, j) * Rational(static_cast<long>(co[static_cast<std::size_t>(i * n + j)]));
  return s;
}

// Row-reduced echelon form over the rationals; returns pivot columns.
std::vector<int> rref(std::vector<RowQ>& rows, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][static_cast<std::size_t>(c)]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][static_cast<std::size_t>(c)];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][static_cast<std::size_t>(c)]) == 0) continue;
      const Rational f = rows[i][static_cast<std::size_t>(c)];
      for (int j = 0; j < cols; ++j) rows[i][static_cast<std::size_t>(j)] -= f * rows[r][static_cast<std::size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// The cone restricted to matrices with zero first row (a complement of the
// lineality space) and parametrized by the free variables of its equalities.
class ReducedCone {
 public:
  explicit ReducedCone(const Cone& k) : n_(k.n), q_(k.n * (k.n - 1)) {
    std::vector<RowQ> eq;
    for (const auto& e : k.equalities) eq.push_back(quotient(e));
    const auto pivots = rref(eq, q_);
    std::vector<bool> is_pivot(static_cast<std::size_t>(q_), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    for (int c = 0; c < q_; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)]) free_.push_back(c);
    // z = basis_ * y, one row per quotient coordinate.
    basis_.assign(static_cast<std::size_t>(q_), RowQ(free_.size()));
    for (std::size_t f = 0; f < free_.size(); ++f) basis_[static_cast<std::size_t>(free_[f])][f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t f = 0; f < free_.size(); ++f) {
        basis_[static_cast<std::size_t>(pivots[r])][f] = -eq[r][static_cast<std::size_t>(free_[f])];
      }
    }
    for (const auto& f : k.inequalities) rows_.push_back(reduce(f));
  }

  int dim() const { return static_cast<int>(free_.size()); }
  const std::vector<RowQ>& rows() const { return rows_; }

  RowQ reduce(const Coeffs& f) const {
    const RowQ z = quotient(f);
    RowQ g(free_.size());
    for (int c = 0; c < q_; ++c) {
      if (sgn(z[static_cast<std::size_t>(c)]) == 0) continue;
      for (std::size_t j = 0; j < free_.size(); ++j) g[j] += z[static_cast<std::size_t>(c)] * basis_[static_cast<std::size_t>(c)][j];
    }
    return g;
  }

  TropMatrix lift(const RowQ& y) const {
    TropMatrix a(n_);
    for (int c = 0; c < q_; ++c) {
      Rational z = 0;
      for (std::size_t j = 0; j < free_.size(); ++j) z += basis_[static_cast<std::size_t>(c)][j] * y[j];
      a(1 + c / n_, c % n_) = z;
    }
    return a;
  }

  // max obj.y over {rows . y <= 0 for active rows, -1 <= y <= 1}.
  LpResult maximize(const RowQ& obj, const std::vector<bool>& active) const {
    const std::size_t d = free_.size();
    if (d == 0) return LpResult{true, 0, {}};
    std::vector<RowQ> a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!active[i]) continue;
      RowQ row(2 * d);
      for (std::size_t j = 0; j < d; ++j) {
        row[j] = rows_[i][j];
        row[d + j] = -rows_[i][j];
      }
      a.push_back(std::move(row));
      b.emplace_back(0);
    }
    for (std::size_t j = 0; j < 2 * d; ++j) {
      RowQ row(2 * d);
      row[j] = 1;
      a.push_back(std::move(row));
      b.emplace_back(1);
    }
    RowQ c(2 * d);
    for (std::size_t j = 0; j < d; ++j) {
      c[j] = obj[j];
      c[d + j] = -obj[j];
    }
    LpResult r = lp_maximize(a, b, c);
    RowQ y(d);
    for (std::size_t j = 0; j < d; ++j) y[j] = r.x[j] - r.x[d + j];
    r.x = std::move(y);
    return r;
  }

  // A point with every row strictly negative, if one exists.
  std::optional<RowQ> strict_point() const {
    const std::size_t d = free_.size();
    if (rows_.empty()) return RowQ(d);
    std::vector<RowQ> a;
    std::vector<Rational> b;
    for (const auto& g : rows_) {
      RowQ row(2 * d + 1);
      for (std::size_t j = 0; j < d; ++j) {
        row[j] = g[j];
        row[d + j] = -g[j];
      }
      row[2 * d] = 1;
      a.push_back(std::move(row));
      b.emplace_back(0);
    }
    for (std::size_t j = 0; j < 2 * d + 1; ++j) {
      RowQ row(2 * d + 1);
      row[j] = 1;
      a.push_back(std::move(row));
      b.emplace_back(1);
    }
    RowQ c(2 * d + 1);
    c[2 * d] = 1;
    const LpResult r = lp_maximize(a, b, c);
    if (sgn(r.value) <= 0) return std::nullopt;
    RowQ y(d);
    for (std::size_t j = 0; j < d; ++j) y[j] = r.x[j] - r.x[d + j];
    return y;
  }

 private:
  RowQ quotient(const Coeffs& f) const {
    RowQ z(static_cast<std::size_t>(q_));
    for (int c = 0; c < q_; ++c) z[static_cast<std::size_t>(c)] = Rational(static_cast<long>(f[static_cast<std::size_t>(n_ + c)]));
    return z;
  }

  int n_;
  int q_;
  std::vector<int> free_;
  std::vector<RowQ> basis_;
  std::vector<RowQ> rows_;
};

bool is_zero(const RowQ& r) {
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool positively_parallel(const RowQ& a, const RowQ& b) {
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0 && sgn(b[i]) == 0) continue;
    if (sgn(a[i]) == 0 || sgn(b[i]) == 0) return false;
    Rational r = a[i] / b[i];
    if (ratio && r != *ratio) return false;
    ratio = r;
  }
  return ratio && sgn(*ratio) > 0;
}

// Moves inequalities that hold with equality on the whole cone into the equalities.
Cone with_implicit_equalities(const Cone& k) {
  Cone cur = k;
  for (;;) {
    ReducedCone rc(cur);
    if (rc.strict_point()) return cur;
    std::vector<bool> active(cur.inequalities.size(), true);
    std::vector<Coeffs> keep;
    bool moved = false;
    for (std::size_t i = 0; i < cur.inequalities.size(); ++i) {
      RowQ neg = rc.rows()[i];
      for (auto& x : neg) x = -x;
      if (sgn(rc.maximize(neg, active).value) == 0) {
        Coeffs e = cur.inequalities[i];
        normalize_form(e, true);
        cur.equalities.push_back(std::move(e));
        cur.tags.push_back(EqualityTag::path);
        moved = true;
      } else {
        keep.push_back(cur.inequalities[i]);
      }
    }
    if (!moved) fail(Status::degenerate, "cone has no relative interior point");
    cur.inequalities = std::move(keep);
    canonicalize(cur);
  }
}

RowQ to_rational(const Coeffs& co) {
  RowQ r(co.size());
  for (std::size_t i = 0; i < co.size(); ++i) r[i] = Rational(static_cast<long>(co[i]));
  return r;
}

}  // namespace

InTree circled_in_tree(const Digraph& g, NodeSet sink, const Cycle* cycle) {
  const int n = g.n;
  InTree t;
  t.root = min_node(sink);
  t.parent.assign(static_cast<std::size_t>(n), -1);
  NodeSet placed = node_mask(t.root);
  std::vector<int> succ(static_cast<std::size_t>(n), -1);
  NodeSet on_cycle = 0;
  if (cycle != nullptr) {
    on_cycle = cycle_nodes(*cycle);
    for (std::size_t i = 0; i < cycle->size(); ++i) succ[static_cast<std::size_t>((*cycle)[i])] = (*cycle)[(i + 1) % cycle->size()];
  }
  bool cycle_done = cycle == nullptr || (on_cycle & placed) != 0;
  if (cycle != nullptr && cycle_done) {
    for (int x : nodes_of(on_cycle)) {
      if (x != t.root) t.parent[static_cast<std::size_t>(x)] = succ[static_cast<std::size_t>(x)];
    }
    placed |= on_cycle;
  }
  std::vector<int> frontier = nodes_of(placed);
  const NodeSet all = (NodeSet{1} << n) - 1;
  while (placed != all || !cycle_done) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int u : nodes_of(g.in(v) & ~node_mask(v))) {
        if (placed & node_mask(u)) continue;
        t.parent[static_cast<std::size_t>(u)] = v;
        placed |= node_mask(u);
        next.push_back(u);
        if (!cycle_done && (on_cycle & node_mask(u))) {
          for (int x : nodes_of(on_cycle & ~placed)) {
            t.parent[static_cast<std::size_t>(x)] = succ[static_cast<std::size_t>(x)];
            placed |= node_mask(x);
            next.push_back(x);
          }
          cycle_done = true;
        }
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  if (placed != all) fail(Status::degenerate, "relation has no spanning in-tree into its sink");
  return t;
}

Cone psi(const ConnectedRelation& g, const Cycle& cycle, const InTree& tree) {
  const int n = g.graph.n;
  FormCollector out;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (in_tree(tree, u, v)) continue;
      const bool inside = (g.sink & node_mask(u)) && (g.sink & node_mask(v));
      out.add(tree_form(n, u, v, tree, cycle), g.graph.has(u, v), inside ? EqualityTag::cycle : EqualityTag::path);
    }
  }
  return out.finish(n);
}

Cone psi(const ConnectedRelation& g) {
  const auto cycles = enumerate_simple_cycles(g.graph);
  if (cycles.empty()) fail(Status::degenerate, "relation has no cycle");
  const Cycle* c = first_cycle_within(cycles, g.sink);
  if (c == nullptr) c = &cycles.front();
  return psi(g, *c, circled_in_tree(g.graph, g.sink, c));
}

Cone psi_complete(const CompleteSet& g) {
  const int n = g.n();
  std::optional<Cycle> ref;
  for (const auto& p : g.parts()) {
    const auto cycles = enumerate_simple_cycles(p.graph);
    if (const Cycle* c = first_cycle_within(cycles, p.sink)) {
      ref = *c;
      break;
    }
  }
  if (!ref) fail(Status::degenerate, "no sink carries a cycle");

  FormCollector out;
  for (const auto& p : g.parts()) {
    const auto cycles = enumerate_simple_cycles(p.graph);
    const Cycle* own = p.has_cycle_sink() ? first_cycle_within(cycles, p.sink) : nullptr;
    const InTree tree = circled_in_tree(p.graph, p.sink, own);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (in_tree(tree, u, v)) continue;
        const bool inside = (p.sink & node_mask(u)) && (p.sink & node_mask(v));
        out.add(tree_form(n, u, v, tree, *ref), p.graph.has(u, v), inside ? EqualityTag::cycle : EqualityTag::path);
      }
    }
  }
  return out.finish(n);
}

void canonicalize(Cone& k) {
  std::map<Coeffs, EqualityTag> eq;
  for (std::size_t i = 0; i < k.equalities.size(); ++i) {
    auto [it, inserted] = eq.emplace(k.equalities[i], k.tags[i]);
    if (!inserted && k.tags[i] == EqualityTag::cycle) it->second = EqualityTag::cycle;
  }
  k.equalities.clear();
  k.tags.clear();
  for (auto& [co, tag] : eq) {
    k.equalities.push_back(co);
    k.tags.push_back(tag);
  }
  std::sort(k.inequalities.begin(), k.inequalities.end());
  k.inequalities.erase(std::unique(k.inequalities.begin(), k.inequalities.end()), k.inequalities.end());
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.n != b.n) fail(Status::malformed, "cones live in different dimensions");
  Cone k = a;
  k.equalities.insert(k.equalities.end(), b.equalities.begin(), b.equalities.end());
  k.tags.insert(k.tags.end(), b.tags.begin(), b.tags.end());
  k.inequalities.insert(k.inequalities.end(), b.inequalities.begin(), b.inequalities.end());
  canonicalize(k);
  return k;
}

bool contains(const Cone& k, const TropMatrix& a) {
  if (a.size() != k.n) fail(Status::malformed, "matrix and cone dimensions differ");
  for (const auto& e : k.equalities)
    if (sgn(dot(e, a)) != 0) return false;
  for (const auto& f : k.inequalities)
    if (sgn(dot(f, a)) > 0) return false;
  return true;
}

bool strictly_contains(const Cone& k, const TropMatrix& a) {
  if (!contains(k, a)) return false;
  for (const auto& f : k.inequalities)
    if (sgn(dot(f, a)) == 0) return false;
  return true;
}

int rank(const std::vector<Coeffs>& rows) {
  if (rows.empty()) return 0;
  std::vector<RowQ> m;
  for (const auto& r : rows) m.push_back(to_rational(r));
  return static_cast<int>(rref(m, static_cast<int>(rows.front().size())).size());
}

int codim_rank(const Cone& k) { return rank(k.equalities); }

int codim_formula(const CompleteSet& g) {
  const int n = g.n();
  const auto& parts = g.parts();
  std::vector<int> block_of(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int u : nodes_of(parts[i].sink)) block_of[static_cast<std::size_t>(u)] = static_cast<int>(i);
  int total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    // An edgeless singleton sink has no tree edge and no closing cycle edge: e - v + 1 = 0.
    const Digraph s = parts[i].sink_subgraph();
    if (s.edges != 0) total += s.edge_count() - node_count(parts[i].sink);
    const MultiGraph m = contraction(parts[i].graph, [&] {
      std::vector<NodeSet> blocks;
      for (const auto& p : parts) blocks.push_back(p.sink);
      return blocks;
    }());
    std::vector<int> out_degree(parts.size(), 0);
    std::vector<bool> feeds(parts.size(), false);
    for (const auto& e : m.edges) {
      ++out_degree[static_cast<std::size_t>(e.source)];
      if (e.target == static_cast<int>(i)) feeds[static_cast<std::size_t>(e.source)] = true;
    }
    for (std::size_t b = 0; b < parts.size(); ++b) {
      if (feeds[b]) total += out_degree[b] - 1;
    }
  }
  return total;
}

EqualityCounts equality_counts(const Cone& k) {
  std::vector<Coeffs> cyc;
  for (std::size_t i = 0; i < k.equalities.size(); ++i)
    if (k.tags[i] == EqualityTag::cycle) cyc.push_back(k.equalities[i]);
  EqualityCounts c;
  c.cycle = rank(cyc);
  c.path = rank(k.equalities) - c.cycle;
  return c;
}

Cone minimal_representation(const Cone& k) {
  const Cone full = with_implicit_equalities(k);
  Cone out;
  out.n = full.n;
  // Equality basis, cycle-tagged rows first.
  std::vector<RowQ> span;
  for (EqualityTag pass : {EqualityTag::cycle, EqualityTag::path}) {
    for (std::size_t i = 0; i < full.equalities.size(); ++i) {
      if (full.tags[i] != pass) continue;
      std::vector<RowQ> trial = span;
      trial.push_back(to_rational(full.equalities[i]));
      const auto before = span.size();
      std::vector<RowQ> reduced = trial;
      if (rref(reduced, full.n * full.n).size() > before) {
        span = std::move(trial);
        out.equalities.push_back(full.equalities[i]);
        out.tags.push_back(full.tags[i]);
      }
    }
  }

  Cone eq_only = out;
  ReducedCone rc(full);
  std::vector<bool> active(full.inequalities.size(), true);
  // Trivial rows and positive duplicates modulo the equalities go first.
  for (std::size_t i = 0; i < full.inequalities.size(); ++i) {
    if (is_zero(rc.rows()[i])) {
      active[i] = false;
      continue;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (active[j] && positively_parallel(rc.rows()[i], rc.rows()[j])) {
        active[i] = false;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < full.inequalities.size(); ++i) {
    if (!active[i]) continue;
    active[i] = false;
    if (sgn(rc.maximize(rc.rows()[i], active).value) > 0) active[i] = true;
  }
  for (std::size_t i = 0; i < full.inequalities.size(); ++i)
    if (active[i]) out.inequalities.push_back(full.inequalities[i]);
  std::sort(out.inequalities.begin(), out.inequalities.end());
  return out;
}

namespace {

TropMatrix integral_point(const ReducedCone& rc, const RowQ& y) {
  TropMatrix a = rc.lift(y);
  mpz_class scale = 1;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) scale = lcm(scale, a(i, j).get_den());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) a(i, j) *= scale;
  return a;
}

}  // namespace

TropMatrix interior_point(const Cone& k) {
  const Cone full = with_implicit_equalities(k);
  ReducedCone rc(full);
  const auto y = rc.strict_point();
  if (!y) fail(Status::degenerate, "cone has no relative interior point");
  const TropMatrix a = integral_point(rc, *y);
  if (!strictly_contains(full, a) || !contains(k, a)) fail(Status::internal, "interior point check failed");
  return a;
}

std::vector<TropMatrix> sample_interior_points(const Cone& k, int count, std::mt19937_64& rng) {
  const Cone full = with_implicit_equalities(k);
  ReducedCone rc(full);
  const auto y0 = rc.strict_point();
  if (!y0) fail(Status::degenerate, "cone has no relative interior point");
  const std::size_t d = static_cast<std::size_t>(rc.dim());
  const int n = k.n;
  std::vector<bool> active(full.inequalities.size(), true);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<int> weight(0, 3);
  std::uniform_int_distribution<int> lead(1, 4);
  std::uniform_int_distribution<int> shift(-5, 5);

  // Points of the closed cone reached by random objectives.
  std::vector<RowQ> extremes;
  for (int i = 0; i < 4 && d > 0; ++i) {
    RowQ obj(d);
    for (auto& x : obj) x = coord(rng);
    extremes.push_back(rc.maximize(obj, active).x);
  }

  std::vector<TropMatrix> out;
  for (int s = 0; s < count; ++s) {
    RowQ y(d);
    const int w0 = lead(rng);
    for (std::size_t j = 0; j < d; ++j) y[j] = (*y0)[j] * w0;
    for (const auto& e : extremes) {
      const int w = weight(rng);
      for (std::size_t j = 0; j < d; ++j) y[j] += e[j] * w;
    }
    TropMatrix a = integral_point(rc, y);
    // Add a random element of the lineality space.
    const int c = shift(rng);
    std::vector<int> x(static_cast<std::size_t>(n));
    for (auto& xi : x) xi = shift(rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) += c + x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
    out.push_back(std::move(a));
  }
  return out;
}

bool cone_contains(const Cone& outer, const Cone& inner) {
  if (outer.n != inner.n) fail(Status::malformed, "cones live in different dimensions");
  ReducedCone rc(inner);
  std::vector<bool> active(inner.inequalities.size(), true);
  for (const auto& e : outer.equalities) {
    RowQ g = rc.reduce(e);
    if (is_zero(g)) continue;
    if (sgn(rc.maximize(g, active).value) > 0) return false;
    for (auto& x : g) x = -x;
    if (sgn(rc.maximize(g, active).value) > 0) return false;
  }
  for (const auto& f : outer.inequalities) {
    if (std::binary_search(inner.inequalities.begin(), inner.inequalities.end(), f)) continue;
    const RowQ g = rc.reduce(f);
    if (is_zero(g)) continue;
    if (sgn(rc.maximize(g, active).value) > 0) return false;
  }
  return true;
}

bool cone_equal(const Cone& a, const Cone& b) { return cone_contains(a, b) && cone_contains(b, a); }

Rational cycle_polytope_support(const TropMatrix& a) {
  const int n = a.size();
  std::optional<Rational> best;
  for (const Cycle& c : enumerate_simple_cycles(Digraph::complete(n, true))) {
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += a(c[i], c[(i + 1) % c.size()]);
    s /= static_cast<long>(c.size());
    if (!best || s > *best) best = s;
  }
  return *best;
}

}  // namespace polytrope
