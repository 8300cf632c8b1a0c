#ifndef CURVECOUNT_FAMILY_RECURSION_HPP
#define CURVECOUNT_FAMILY_RECURSION_HPP

#include <functional>
#include <map>
#include <optional>

#include "curvecount/count_query.hpp"
#include "curvecount/curve_class.hpp"
#include "curvecount/exact_count.hpp"
#include "curvecount/memo_store.hpp"

namespace curvecount {

// Explicit initial values of the recursion, keyed by query. All other
// initial values follow from vanishing rules.
using SeedTable = std::map<CountQuery, ExactCount>;

// Lines through points, with and without the marked point on the line, plus
// the exceptional curve at a fixed base point.
SeedTable default_seeds();

// Value of N_alpha(r, theta) when it is fixed without recursing, using the
// default seeds. Throws InvalidQuery for alpha = (0,0).
std::optional<ExactCount> base_case(const CountQuery& q);
std::optional<ExactCount> base_case(const CountQuery& q, const SeedTable& seeds);

// Memoized evaluator of the family version of Kontsevich's recursion for
// classes dL - mE on the plane blown up at a moving point.
//
//   N_a(r,t) = sum_{r1+r2=r-3, a1+a2=a} C(r-3,r1) (a1.a2)(a1.l)
//                [ B(a1,a2,r1+1,r2+1,t)(a2.l) - B(a1,a2,r1,r2+2,t)(a1.l) ]
//
// where B is the boundary term below. The theta = 2 slice is the genus-zero
// count on the blow-up at a fixed point and is produced by the same
// recursion from the theta = 2 seeds.
//
// count() is safe to call from several threads on one engine; the memo store
// is shared and every key ends up holding the single deterministic value.
class CountEngine {
 public:
  struct Options {
    bool memoize = true;
    SplitWindow window = kDefaultSplitWindow;
  };

  // Called with (parent, child) for every recursive count() issued while
  // evaluating a parent that is not a base case.
  using EdgeObserver = std::function<void(const CountQuery&, const CountQuery&)>;

  CountEngine();
  explicit CountEngine(Options options, SeedTable seeds = default_seeds());

  ExactCount count(const CountQuery& q);
  ExactCount count(CurveClass alpha, int r, int theta) { return count(CountQuery{alpha, r, theta}); }

  // N_a1(r1,t+2) N_a2(r2,0) + N_a1(r1,t+1) N_a2(r2,1) + N_a1(r1,t) N_a2(r2,2)
  ExactCount boundary(CurveClass a1, CurveClass a2, int r1, int r2, int theta);

  // Rational curves on the one-point blow-up in class dL - mE through
  // 3d - 1 - m generic points (zero when that number is negative).
  ExactCount blowup_gw(CurveClass alpha);

  std::optional<ExactCount> base_case(const CountQuery& q) const;

  const Options& options() const { return options_; }
  const SeedTable& seeds() const { return seeds_; }
  MemoStore& memo() { return memo_; }
  const MemoStore& memo() const { return memo_; }

  void set_edge_observer(EdgeObserver observer) { observer_ = std::move(observer); }

 private:
  ExactCount evaluate(const CountQuery& q, const CountQuery* parent);
  ExactCount recurse(const CountQuery& q);
  ExactCount boundary_from(const CountQuery& parent, CurveClass a1, CurveClass a2, int r1,
                           int r2, int theta);

  Options options_;
  SeedTable seeds_;
  MemoStore memo_;
  EdgeObserver observer_;
};

}  // namespace curvecount

#endif  // CURVECOUNT_FAMILY_RECURSION_HPP
