#include "curvecount/curve_class.hpp"

#include <string>

namespace curvecount {

std::ostream& operator<<(std::ostream& os, CurveClass c) {
  return os << '(' << c.d << ',' << c.m << ')';
}

void require_nonzero(CurveClass a) {
  if (a.is_zero()) {
    throw InvalidQuery("curve class (0,0) does not define a moduli space");
  }
}

std::vector<Split> split_range(CurveClass a, SplitWindow window) {
  require_nonzero(a);
  std::vector<Split> out;
  const int d_lo = -window.d_margin;
  const int d_hi = a.d + window.d_margin;
  const int m_lo = -window.m_margin;
  const int m_hi = a.m + window.m_margin;
  if (d_hi < d_lo || m_hi < m_lo) return out;
  out.reserve(static_cast<std::size_t>(d_hi - d_lo + 1) * static_cast<std::size_t>(m_hi - m_lo + 1));
  for (int d1 = d_lo; d1 <= d_hi; ++d1) {
    for (int m1 = m_lo; m1 <= m_hi; ++m1) {
      const CurveClass first{d1, m1};
      const CurveClass second = a - first;
      if (first.is_zero() || second.is_zero()) continue;
      out.emplace_back(first, second);
    }
  }
  return out;
}

}  // namespace curvecount
