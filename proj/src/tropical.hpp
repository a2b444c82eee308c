#pragma once

#include <vector>

#include "rational.hpp"

namespace polytrope {

// Square matrix of finite rationals; entry (i, j) is the weight of edge i -> j.
class TropMatrix {
 public:
  TropMatrix() = default;
  explicit TropMatrix(int n);

  static TropMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int size() const noexcept { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  TropMatrix transpose() const;

  bool operator==(const TropMatrix& other) const = default;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

// A point of the tropical torus, canonicalized so that coordinate 0 is zero.
using TropPoint = std::vector<Rational>;

enum class VertexSource { polytrope, eigenspace };

struct TropPolytopeVertices {
  std::vector<TropPoint> vertices;
  std::vector<int> columns;  // first column of the normalized star producing each vertex
  VertexSource source = VertexSource::polytrope;
};

Rational eigenvalue(const TropMatrix& a);
TropMatrix normalize(const TropMatrix& a);
TropMatrix trop_mat_mul(const TropMatrix& a, const TropMatrix& b);

// Both throw Error(positive_cycle) when eigenvalue(a) > 0.
TropMatrix kleene_plus(const TropMatrix& a);
TropMatrix kleene_star(const TropMatrix& a);

TropPoint canonical_point(TropPoint x);
TropPoint column(const TropMatrix& a, int j);

TropPolytopeVertices polytrope_vertices(const TropMatrix& a);
TropPolytopeVertices eigenspace_vertices(const TropMatrix& a);

bool check_eigenpair(const TropMatrix& a, const TropPoint& x);
bool check_polytrope_member(const TropMatrix& a, const TropPoint& x);

}  // namespace polytrope
