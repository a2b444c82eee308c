#pragma once

#include <vector>

#include "rational.hpp"

namespace polytrope {

struct LpResult {
  bool bounded = true;
  Rational value;
  std::vector<Rational> x;
};

// Exact primal simplex with Bland's rule for
//   maximize c.x  subject to  A x <= b,  x >= 0,
// where b >= 0 so that the slack basis is feasible.
LpResult lp_maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                     const std::vector<Rational>& c);

}  // namespace polytrope
