#ifndef CURVECOUNT_CHERN_HPP
#define CURVECOUNT_CHERN_HPP

#include <map>
#include <utility>

#include "curvecount/errors.hpp"
#include "curvecount/exact_count.hpp"

namespace curvecount {

// Element of H*(D x P^2) = Z[y, a] / (y^(top+1), a^3), where D is the
// projective space of degree-d plane curves (top = d(d+3)/2), y its
// hyperplane class and a the hyperplane class of P^2.
//
// Terms are keyed by (y exponent, a exponent). Zero coefficients are never
// stored.
class CohomClass {
 public:
  using Monomial = std::pair<int, int>;

  explicit CohomClass(int top_y_degree);

  static CohomClass one(int top_y_degree) { return monomial(top_y_degree, 0, 0, 1); }
  static CohomClass y(int top_y_degree) { return monomial(top_y_degree, 1, 0, 1); }
  static CohomClass a(int top_y_degree) { return monomial(top_y_degree, 0, 1, 1); }
  static CohomClass monomial(int top_y_degree, int y_exp, int a_exp, const ExactCount& coeff);

  int top_y_degree() const { return top_; }
  const std::map<Monomial, ExactCount>& terms() const { return terms_; }
  ExactCount coefficient(int y_exp, int a_exp) const;
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of y^top a^2, i.e. evaluation on the fundamental class.
  ExactCount integrate() const { return coefficient(top_, 2); }

  CohomClass& operator+=(const CohomClass& o);
  CohomClass& operator-=(const CohomClass& o);
  CohomClass& operator*=(const ExactCount& s);
  CohomClass pow(int exponent) const;

  friend CohomClass operator+(CohomClass p, const CohomClass& q) { return p += q; }
  friend CohomClass operator-(CohomClass p, const CohomClass& q) { return p -= q; }
  friend CohomClass operator*(CohomClass p, const ExactCount& s) { return p *= s; }
  friend CohomClass operator*(const ExactCount& s, CohomClass p) { return p *= s; }
  friend bool operator==(const CohomClass& p, const CohomClass& q) {
    return p.top_ == q.top_ && p.terms_ == q.terms_;
  }

 private:
  void add_term(int y_exp, int a_exp, const ExactCount& coeff);
  void require_same_ring(const CohomClass& o) const;

  int top_;
  std::map<Monomial, ExactCount> terms_;
};

// Truncated product. Throws std::invalid_argument for classes from rings with
// different top degrees.
CohomClass ring_mul(const CohomClass& p, const CohomClass& q);
inline CohomClass operator*(const CohomClass& p, const CohomClass& q) { return ring_mul(p, q); }

// d(d+3)/2
int linear_system_dimension(int d);

// Euler class of V_k = O_D(1) (x) Sym^k(T*P^2) (x) O_P2(d), of rank k + 1,
// over D x P^2 with D the degree-d linear system. Computed from the Chern
// roots c1 + i x1 + (k - i) x2, i = 0..k, with c1 = y + d a and x1, x2 the
// roots of T*P^2 (x1 + x2 = -3a, x1 x2 = 3a^2).
CohomClass euler_V(int k, int d);
CohomClass euler_V(int k, int d, int top_y_degree);

// [S_m] = e(V_0) e(V_1) ... e(V_{m-1}): degree-d curves with an m-fold point
// at the marked point of P^2.
CohomClass s_class(int m, int d);

// d(d+3)/2 - (m^2 + m - 4)/2; for m = d - 1 this is 2d + 2.
int codim_j(int d, int m);

// Number of degree-d curves through codim_j(d,m) - theta general points with
// an m-fold point on a general cycle of class a^theta: the degree of
// [S_m] y^(j - theta) a^theta. Counts all such curves, rational or not.
ExactCount fixed_singularity_count(int d, int m, int theta);

}  // namespace curvecount

#endif  // CURVECOUNT_CHERN_HPP
