#include "curvecount/chern.hpp"

#include <stdexcept>
#include <string>


namespace curvecount {

namespace {

constexpr int kTopADegree = 2;

}  // namespace

CohomClass::CohomClass(int top_y_degree) : top_(top_y_degree) {
  if (top_y_degree < 0) {
    throw std::invalid_argument("top y degree must be nonnegative");
  }
}

CohomClass CohomClass::monomial(int top_y_degree, int y_exp, int a_exp, const ExactCount& coeff) {
  CohomClass c(top_y_degree);
  c.add_term(y_exp, a_exp, coeff);
  return c;
}

void CohomClass::add_term(int y_exp, int a_exp, const ExactCount& coeff) {
  if (y_exp < 0 || a_exp < 0) throw std::invalid_argument("negative exponent");
  if (y_exp > top_ || a_exp > kTopADegree || coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({y_exp, a_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void CohomClass::require_same_ring(const CohomClass& o) const {
  if (top_ != o.top_) {
    throw std::invalid_argument("cohomology classes from different rings (top y degree " +
                                std::to_string(top_) + " vs " + std::to_string(o.top_) + ")");
  }
}

ExactCount CohomClass::coefficient(int y_exp, int a_exp) const {
  auto it = terms_.find({y_exp, a_exp});
  return it == terms_.end() ? ExactCount(0) : it->second;
}

CohomClass& CohomClass::operator+=(const CohomClass& o) {
  require_same_ring(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono.first, mono.second, c);
  return *this;
}

CohomClass& CohomClass::operator-=(const CohomClass& o) {
  require_same_ring(o);
  for (const auto& [mono, c] : o.terms_) add_term(mono.first, mono.second, -c);
  return *this;
}

CohomClass& CohomClass::operator*=(const ExactCount& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= s;
  return *this;
}

CohomClass CohomClass::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative power of a cohomology class");
  CohomClass result = one(top_);
  CohomClass base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = ring_mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = ring_mul(base, base);
  }
  return result;
}

CohomClass ring_mul(const CohomClass& p, const CohomClass& q) {
  if (p.top_y_degree() != q.top_y_degree()) {
    throw std::invalid_argument("cohomology classes from different rings (top y degree " +
                                std::to_string(p.top_y_degree()) + " vs " +
                                std::to_string(q.top_y_degree()) + ")");
  }
  CohomClass out(p.top_y_degree());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      const int ye = mp.first + mq.first;
      const int ae = mp.second + mq.second;
      if (ye > out.top_y_degree() || ae > kTopADegree) continue;
      out += CohomClass::monomial(out.top_y_degree(), ye, ae, cp * cq);
    }
  }
  return out;
}

int linear_system_dimension(int d) { return d * (d + 3) / 2; }

CohomClass euler_V(int k, int d) { return euler_V(k, d, linear_system_dimension(d)); }

CohomClass euler_V(int k, int d, int top) {
  if (k < 0) throw InvalidQuery("bundle index k must be nonnegative");
  const CohomClass a = CohomClass::a(top);
  const CohomClass c1 = CohomClass::y(top) + a * ExactCount(d);
  const CohomClass alpha1 = a * ExactCount(-3);  // c1(T*P^2)
  const CohomClass beta2 = a.pow(2) * ExactCount(3);  // c2(T*P^2)

  // Power sums of the weights i = 0..k.
  const ExactCount s1 = ExactCount(k) * (k + 1) / 2;
  const ExactCount s2 = ExactCount(k) * (k + 1) * (2 * k + 1) / 6;

  // e1 of the linear forms i x1 + (k-i) x2 is s1 (x1 + x2).
  // e2 = A (x1^2 + x2^2) + B x1 x2 with A = sum_{i<j} i j and
  // B = sum_{i != j} i (k - j); then x1^2 + x2^2 = alpha1^2 - 2 beta2.
  const ExactCount coeff_sq = (s1 * s1 - s2) / 2;
  const ExactCount coeff_mixed = s1 * s1 - (ExactCount(k) * s1 - s2);
  const CohomClass e1 = alpha1 * s1;
  const CohomClass e2 = (alpha1.pow(2) - beta2 * ExactCount(2)) * coeff_sq + beta2 * coeff_mixed;

  // Elementary symmetric functions of degree >= 3 are multiples of a^3 = 0.
  CohomClass e = c1.pow(k + 1) + c1.pow(k) * e1;
  if (k >= 1) e += c1.pow(k - 1) * e2;
  return e;
}

CohomClass s_class(int m, int d) {
  if (m < 2) throw InvalidQuery("multiplicity must be at least 2, got " + std::to_string(m));
  if (d <= 0) throw InvalidQuery("degree must be positive, got " + std::to_string(d));
  const int top = linear_system_dimension(d);
  CohomClass product = CohomClass::one(top);
  for (int k = 0; k < m && !product.is_zero(); ++k) product = product * euler_V(k, d, top);
  return product;
}

int codim_j(int d, int m) {
  if (m < 2) throw InvalidQuery("multiplicity must be at least 2, got " + std::to_string(m));
  return linear_system_dimension(d) - (m * m + m - 4) / 2;
}

ExactCount fixed_singularity_count(int d, int m, int theta) {
  if (theta < 0 || theta > 2) {
    throw InvalidQuery("theta must be 0, 1 or 2, got " + std::to_string(theta));
  }
  const int points = codim_j(d, m) - theta;
  if (points < 0) return 0;
  const int top = linear_system_dimension(d);
  const CohomClass cycle = s_class(m, d) * CohomClass::y(top).pow(points) * CohomClass::a(top).pow(theta);
  return cycle.integrate();
}

}  // namespace curvecount
