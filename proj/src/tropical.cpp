#include "tropical.hpp"

#include <algorithm>
#include <optional>

#include "errors.hpp"

namespace polytrope {

TropMatrix::TropMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {
  if (n < 1) fail(Status::malformed, "matrix dimension must be positive");
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int n = static_cast<int>(rows.size());
  TropMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      fail(Status::malformed, "matrix is not square");
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

TropMatrix TropMatrix::transpose() const {
  TropMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

// Karp's maximum mean cycle with a virtual source attached to every node.
Rational eigenvalue(const TropMatrix& a) {
  const int n = a.size();
  std::vector<std::vector<Rational>> d(static_cast<std::size_t>(n + 1), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int k = 1; k <= n; ++k) {
    for (int v = 0; v < n; ++v) {
      Rational best = d[k - 1][0] + a(0, v);
      for (int u = 1; u < n; ++u) {
        Rational cand = d[k - 1][u] + a(u, v);
        if (cand > best) best = cand;
      }
      d[k][v] = best;
    }
  }
  std::optional<Rational> lambda;
  for (int v = 0; v < n; ++v) {
    std::optional<Rational> worst;
    for (int k = 0; k < n; ++k) {
      Rational mean = (d[n][v] - d[k][v]) / (n - k);
      if (!worst || mean < *worst) worst = mean;
    }
    if (!lambda || *worst > *lambda) lambda = worst;
  }
  return *lambda;
}

TropMatrix normalize(const TropMatrix& a) {
  const Rational lambda = eigenvalue(a);
  TropMatrix out = a;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) out(i, j) -= lambda;
  return out;
}

TropMatrix trop_mat_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != b.size()) fail(Status::malformed, "dimension mismatch in tropical product");
  const int n = a.size();
  TropMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational best = a(i, 0) + b(0, j);
      for (int k = 1; k < n; ++k) {
        Rational cand = a(i, k) + b(k, j);
        if (cand > best) best = cand;
      }
      out(i, j) = best;
    }
  }
  return out;
}

TropMatrix kleene_plus(const TropMatrix& a) {
  if (eigenvalue(a) > 0) fail(Status::positive_cycle, "matrix has a positive cycle");
  const int n = a.size();
  TropMatrix d = a;
  Rational cand;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cand = d(i, k) + d(k, j);
        if (cand > d(i, j)) d(i, j) = cand;
      }
    }
  }
  return d;
}

TropMatrix kleene_star(const TropMatrix& a) {
  TropMatrix d = kleene_plus(a);
  for (int i = 0; i < a.size(); ++i) {
    if (d(i, i) < 0) d(i, i) = 0;
  }
  return d;
}

TropPoint canonical_point(TropPoint x) {
  if (x.empty()) return x;
  const Rational shift = x[0];
  for (auto& c : x) c -= shift;
  return x;
}

TropPoint column(const TropMatrix& a, int j) {
  TropPoint x(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) x[static_cast<std::size_t>(i)] = a(i, j);
  return x;
}

namespace {

void add_vertex(TropPolytopeVertices& out, TropPoint p, int col) {
  if (std::find(out.vertices.begin(), out.vertices.end(), p) != out.vertices.end()) return;
  out.vertices.push_back(std::move(p));
  out.columns.push_back(col);
}

}  // namespace

TropPolytopeVertices polytrope_vertices(const TropMatrix& a) {
  const TropMatrix star = kleene_star(normalize(a));
  TropPolytopeVertices out;
  out.source = VertexSource::polytrope;
  for (int j = 0; j < a.size(); ++j) add_vertex(out, canonical_point(column(star, j)), j);
  return out;
}

TropPolytopeVertices eigenspace_vertices(const TropMatrix& a) {
  const TropMatrix plus = kleene_plus(normalize(a));
  TropPolytopeVertices out;
  out.source = VertexSource::eigenspace;
  for (int j = 0; j < a.size(); ++j) {
    // Column j of the plus and star matrices agree exactly when plus(j, j) = 0.
    if (plus(j, j) == 0) add_vertex(out, canonical_point(column(plus, j)), j);
  }
  return out;
}

bool check_eigenpair(const TropMatrix& a, const TropPoint& x) {
  const int n = a.size();
  if (static_cast<int>(x.size()) != n) fail(Status::malformed, "dimension mismatch in eigenpair check");
  const Rational lambda = eigenvalue(a);
  for (int i = 0; i < n; ++i) {
    Rational best = a(i, 0) + x[0];
    for (int j = 1; j < n; ++j) {
      Rational cand = a(i, j) + x[static_cast<std::size_t>(j)];
      if (cand > best) best = cand;
    }
    if (best != lambda + x[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

bool check_polytrope_member(const TropMatrix& a, const TropPoint& x) {
  const int n = a.size();
  if (static_cast<int>(x.size()) != n) fail(Status::malformed, "dimension mismatch in polytrope check");
  std::optional<Rational> best;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational term = a(i, j) + x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(i)];
      if (!best || term > *best) best = term;
    }
  }
  return *best == eigenvalue(a);
}

}  // namespace polytrope
