#include "curvecount/kontsevich.hpp"

#include <string>


namespace curvecount {

namespace {

ExactCount binomial(int n, int k) {
  ExactCount out;
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

ExactCount KontsevichOracle::n_plane(int d) {
  if (d <= 0) {
    throw InvalidQuery("plane degree must be positive, got " + std::to_string(d));
  }
  std::lock_guard lock(mutex_);
  for (int e = static_cast<int>(memo_.size()); e <= d; ++e) {
    ExactCount n = 0;
    for (int d1 = 1; d1 < e; ++d1) {
      const int d2 = e - d1;
      const ExactCount w1 = ExactCount(d1 * d1) * (d2 * d2) * binomial(3 * e - 4, 3 * d1 - 2);
      const ExactCount w2 = ExactCount(d1 * d1 * d1) * d2 * binomial(3 * e - 4, 3 * d1 - 1);
      n += memo_[static_cast<std::size_t>(d1)] * memo_[static_cast<std::size_t>(d2)] * (w1 - w2);
    }
    memo_.push_back(n);
  }
  return memo_[static_cast<std::size_t>(d)];
}

ExactCount n_plane(int d) {
  static KontsevichOracle oracle;
  return oracle.n_plane(d);
}

}  // namespace curvecount
