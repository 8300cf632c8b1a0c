#ifndef CURVECOUNT_CURVE_CLASS_HPP
#define CURVECOUNT_CURVE_CLASS_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "curvecount/errors.hpp"

namespace curvecount {

// Homology class dL - mE on the plane blown up at one point.
// Any integer pair is representable; (0,0) is only rejected where the
// class is interpreted as a moduli class.
struct CurveClass {
  int d = 0;
  int m = 0;

  constexpr bool is_zero() const { return d == 0 && m == 0; }
  constexpr CurveClass operator+(CurveClass o) const { return {d + o.d, m + o.m}; }
  constexpr CurveClass operator-(CurveClass o) const { return {d - o.d, m - o.m}; }
  friend constexpr auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

inline constexpr CurveClass kLine{1, 0};
inline constexpr CurveClass kExceptional{0, -1};

std::ostream& operator<<(std::ostream& os, CurveClass c);

// (d1,m1).(d2,m2) = d1 d2 - m1 m2
constexpr std::int64_t pairing(CurveClass a, CurveClass b) {
  return std::int64_t{a.d} * b.d - std::int64_t{a.m} * b.m;
}

// alpha . l
constexpr std::int64_t line_degree(CurveClass a) { return pairing(a, kLine); }

void require_nonzero(CurveClass a);

// Bounds of the finite window over which alpha = alpha1 + alpha2 is summed:
// d1 in [-d_margin, d + d_margin], m1 in [-m_margin, m + m_margin].
// Summands outside the default window all vanish; wider windows exist so
// that this can be checked.
struct SplitWindow {
  int d_margin = 0;
  int m_margin = 1;
};

inline constexpr SplitWindow kDefaultSplitWindow{};

using Split = std::pair<CurveClass, CurveClass>;

// All (alpha1, alpha2) with alpha1 + alpha2 = a, both nonzero, alpha1 inside
// the window. Ordered by (d1, m1); duplicate-free.
std::vector<Split> split_range(CurveClass a, SplitWindow window = kDefaultSplitWindow);

}  // namespace curvecount

#endif  // CURVECOUNT_CURVE_CLASS_HPP
