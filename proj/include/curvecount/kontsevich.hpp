#ifndef CURVECOUNT_KONTSEVICH_HPP
#define CURVECOUNT_KONTSEVICH_HPP

#include <mutex>
#include <vector>

#include "curvecount/errors.hpp"
#include "curvecount/exact_count.hpp"

namespace curvecount {

// Number n_d of rational plane curves of degree d through 3d - 1 general
// points, from Kontsevich's classical recursion
//
//   n_d = sum_{d1+d2=d} n_d1 n_d2 ( d1^2 d2^2 C(3d-4, 3d1-2) - d1^3 d2 C(3d-4, 3d1-1) ).
//
// Deliberately shares no code with CountEngine so that each can check the
// other.
class KontsevichOracle {
 public:
  ExactCount n_plane(int d);

 private:
  std::mutex mutex_;
  std::vector<ExactCount> memo_{ExactCount(0), ExactCount(1)};
};

// Convenience wrapper over a process-wide oracle.
ExactCount n_plane(int d);

}  // namespace curvecount

#endif  // CURVECOUNT_KONTSEVICH_HPP
