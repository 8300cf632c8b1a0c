#include "curvecount/family_recursion.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace curvecount {

namespace {

void validate(const CountQuery& q) {
  require_nonzero(q.alpha);
  if (q.r < 0 || q.theta < 0) {
    std::ostringstream msg;
    msg << "point count and theta must be nonnegative, got " << q;
    throw InvalidQuery(msg.str());
  }
}

// Row n of Pascal's triangle.
std::vector<ExactCount> pascal_row(int n) {
  std::vector<ExactCount> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    row[static_cast<std::size_t>(i)] = 1;
    for (int k = i - 1; k >= 1; --k) {
      row[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k) - 1];
    }
  }
  return row;
}

}  // namespace

SeedTable default_seeds() {
  const CurveClass l = kLine;
  const CurveClass l_minus_e{1, 1};
  return {
      {{l, 4, 0}, 0},
      {{l, 3, 1}, 0},
      {{l_minus_e, 3, 0}, 0},
      {{l_minus_e, 2, 1}, 1},
      {{l, 2, 2}, 1},
      {{l_minus_e, 1, 2}, 1},
      {{kExceptional, 0, 2}, 1},
  };
}

std::optional<ExactCount> base_case(const CountQuery& q) {
  static const SeedTable seeds = default_seeds();
  return base_case(q, seeds);
}

std::optional<ExactCount> base_case(const CountQuery& q, const SeedTable& seeds) {
  require_nonzero(q.alpha);
  const auto [d, m] = q.alpha;
  if (!dimension_gate(q)) return ExactCount(0);
  if (q.theta >= 3) return ExactCount(0);
  if (d < 0) return ExactCount(0);
  if (m < 0 && !(d == 0 && m == -1 && q.theta == 2)) return ExactCount(0);
  if (d >= 2 && m >= d) return ExactCount(0);
  // -mE with m >= 1 is not effective.
  if (d == 0 && m >= 1) return ExactCount(0);
  if (d == 1 && m >= 2) return ExactCount(0);
  if (auto it = seeds.find(q); it != seeds.end()) return it->second;
  return std::nullopt;
}

CountEngine::CountEngine() : CountEngine(Options{}) {}

CountEngine::CountEngine(Options options, SeedTable seeds)
    : options_(options), seeds_(std::move(seeds)) {}

std::optional<ExactCount> CountEngine::base_case(const CountQuery& q) const {
  return curvecount::base_case(q, seeds_);
}

ExactCount CountEngine::count(const CountQuery& q) { return evaluate(q, nullptr); }

ExactCount CountEngine::evaluate(const CountQuery& q, const CountQuery* parent) {
  validate(q);
  if (parent != nullptr) {
    // Every recursion edge strictly lowers r, which is what makes it terminate.
    if (q.r >= parent->r) {
      std::ostringstream msg;
      msg << "recursion edge " << *parent << " -> " << q << " does not decrease r";
      throw std::logic_error(msg.str());
    }
    if (observer_) observer_(*parent, q);
  }
  if (auto base = base_case(q)) return *base;
  if (options_.memoize) {
    if (auto hit = memo_.find(q)) return *hit;
  }
  ExactCount value = recurse(q);
  if (options_.memoize) memo_.insert(q, value);
  return value;
}

ExactCount CountEngine::recurse(const CountQuery& q) {
  if (q.r < 3) {
    std::ostringstream msg;
    msg << "no base case covers " << q;
    throw std::logic_error(msg.str());
  }
  const int n = q.r - 3;
  const auto binom = pascal_row(n);
  ExactCount total = 0;
  ExactCount term;
  for (const auto& [a1, a2] : split_range(q.alpha, options_.window)) {
    const std::int64_t l1 = line_degree(a1);
    const std::int64_t l2 = line_degree(a2);
    const std::int64_t a12 = pairing(a1, a2);
    if (l1 == 0 || a12 == 0) continue;
    for (int r1 = 0; r1 <= n; ++r1) {
      const int r2 = n - r1;
      term = 0;
      if (l2 != 0) {
        term += boundary_from(q, a1, a2, r1 + 1, r2 + 1, q.theta) * ExactCount(static_cast<long>(l2));
      }
      term -= boundary_from(q, a1, a2, r1, r2 + 2, q.theta) * ExactCount(static_cast<long>(l1));
      if (term == 0) continue;
      total += binom[static_cast<std::size_t>(r1)] * ExactCount(static_cast<long>(a12 * l1)) * term;
    }
  }
  return total;
}

ExactCount CountEngine::boundary(CurveClass a1, CurveClass a2, int r1, int r2, int theta) {
  require_nonzero(a1);
  require_nonzero(a2);
  if (r1 < 0 || r2 < 0 || theta < 0) {
    throw InvalidQuery("boundary term needs nonnegative point counts and theta");
  }
  ExactCount sum = 0;
  for (int k = 0; k <= 2; ++k) {
    ExactCount first = count(CountQuery{a1, r1, theta + 2 - k});
    if (first == 0) continue;
    sum += first * count(CountQuery{a2, r2, k});
  }
  return sum;
}

ExactCount CountEngine::boundary_from(const CountQuery& parent, CurveClass a1, CurveClass a2,
                                      int r1, int r2, int theta) {
  ExactCount sum = 0;
  for (int k = 0; k <= 2; ++k) {
    const CountQuery first_q{a1, r1, theta + 2 - k};
    // Gate first: most factors vanish by dimension and need no evaluation.
    if (!dimension_gate(first_q)) continue;
    const CountQuery second_q{a2, r2, k};
    if (!dimension_gate(second_q)) continue;
    ExactCount first = evaluate(first_q, &parent);
    if (first == 0) continue;
    sum += first * evaluate(second_q, &parent);
  }
  return sum;
}

ExactCount CountEngine::blowup_gw(CurveClass alpha) {
  require_nonzero(alpha);
  const int r = 3 * alpha.d - 1 - alpha.m;
  if (r < 0) return 0;
  return count(CountQuery{alpha, r, 2});
}

}  // namespace curvecount
