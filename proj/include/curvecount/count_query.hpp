#ifndef CURVECOUNT_COUNT_QUERY_HPP
#define CURVECOUNT_COUNT_QUERY_HPP

#include <compare>
#include <ostream>

#include "curvecount/curve_class.hpp"

namespace curvecount {

// N_alpha(r, theta): r generic point constraints, the m-fold point
// constrained to a generic cycle of codimension theta in the base plane.
struct CountQuery {
  CurveClass alpha;
  int r = 0;
  int theta = 0;

  friend constexpr auto operator<=>(const CountQuery&, const CountQuery&) = default;
};

std::ostream& operator<<(std::ostream& os, const CountQuery& q);

// The point count forced by the dimension of the family moduli space,
// 3d + 1 - m - theta. May be negative.
constexpr int expected_points(CurveClass alpha, int theta) {
  return 3 * alpha.d + 1 - alpha.m - theta;
}

// True iff r + theta = 3d + 1 - m; counts failing the gate are zero.
constexpr bool dimension_gate(const CountQuery& q) {
  return q.r == expected_points(q.alpha, q.theta);
}

}  // namespace curvecount

#endif  // CURVECOUNT_COUNT_QUERY_HPP
