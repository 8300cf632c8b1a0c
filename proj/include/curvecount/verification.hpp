#ifndef CURVECOUNT_VERIFICATION_HPP
#define CURVECOUNT_VERIFICATION_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvecount/count_query.hpp"
#include "curvecount/exact_count.hpp"
#include "curvecount/family_recursion.hpp"

namespace curvecount {

struct GoldenRow {
  CountQuery query;
  const char* expected;  // decimal
};

// Published values, each row keyed by (d, m, theta, r) exactly as tabulated.
struct GoldenTable {
  std::string_view name;
  std::string_view description;
  std::span<const GoldenRow> rows;
};

std::span<const GoldenTable> golden_tables();
const GoldenTable& golden_table(std::string_view name);  // throws InvalidQuery

struct CheckResult {
  std::string label;     // e.g. "(5,3,0,13)" or "node identity d=4"
  CountQuery query;      // the recursion query involved
  ExactCount expected;   // reference value (table cell or oracle)
  ExactCount computed;   // value from the family recursion
  bool pass = false;
};

struct Section {
  std::string name;
  std::vector<CheckResult> checks;
  bool pass() const;
};

struct VerifyReport {
  std::vector<Section> sections;
  bool pass() const;
  std::size_t failures() const;
  std::string to_text() const;
  std::string to_json(int indent = 2) const;
};

// Recomputes every row of one golden table through engine.count().
Section run_table(CountEngine& engine, std::string_view name);

// Cross-oracle identities up to degree max_d (1 <= max_d <= 10):
//   node identity      count((d,2), 3d-1, 0) = (d-1)(d-2)/2 n_d,    3 <= d <= max_d
//   plane reduction    blowup_gw((d,0)) = n_d,                        1 <= d <= max_d
//   chern agreement    Euler class count = count((d,d-1), 2d+2-t, t), 4 <= d <= min(max_d+1, 9)
std::vector<Section> run_identities(CountEngine& engine, int max_d);

// Recomputes every memoized entry with a fresh, memo-less-at-start engine and
// reports any stored value that does not reproduce.
Section audit_memo(const MemoStore& store, const SeedTable& seeds = default_seeds());

struct VerifyOptions {
  bool deep = false;
  int jobs = 1;
};

inline constexpr int kDefaultIdentityDegree = 8;
inline constexpr int kMaxIdentityDegree = 10;

VerifyReport verify_all(CountEngine& engine, const VerifyOptions& options = {});

}  // namespace curvecount

#endif  // CURVECOUNT_VERIFICATION_HPP
