#include "lp.hpp"

#include "errors.hpp"

namespace polytrope {

LpResult lp_maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                     const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t nv = c.size();
  const std::size_t cols = nv + m;  // structural then slack columns; rhs stored separately
  for (const auto& row : a) {
    if (row.size() != nv) fail(Status::internal, "LP row has the wrong width");
  }
  for (const auto& bi : b) {
    if (sgn(bi) < 0) fail(Status::internal, "LP right-hand side must be non-negative");
  }

  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols));
  std::vector<Rational> rhs = b;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) t[i][j] = a[i][j];
    t[i][nv + i] = 1;
    basis[i] = nv + i;
  }
  std::vector<Rational> reduced(cols);
  for (std::size_t j = 0; j < nv; ++j) reduced[j] = c[j];
  Rational objective_rhs = 0;  // holds minus the current objective value

  std::vector<std::size_t> nonzero;
  Rational factor;
  Rational ratio;
  Rational best_ratio;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(reduced[j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      ratio = rhs[i] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) return LpResult{false, 0, {}};

    auto& prow = t[leave];
    const Rational pivot = prow[enter];
    nonzero.clear();
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] /= pivot;
        nonzero.push_back(j);
      }
    }
    rhs[leave] /= pivot;

    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      factor = t[i][enter];
      for (std::size_t j : nonzero) t[i][j] -= factor * prow[j];
      rhs[i] -= factor * rhs[leave];
    }
    if (sgn(reduced[enter]) != 0) {
      factor = reduced[enter];
      for (std::size_t j : nonzero) reduced[j] -= factor * prow[j];
      objective_rhs -= factor * rhs[leave];
    }
    basis[leave] = enter;
  }

  LpResult result;
  result.value = -objective_rhs;
  result.x.assign(nv, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < nv) result.x[basis[i]] = rhs[i];
  }
  return result;
}

}  // namespace polytrope
