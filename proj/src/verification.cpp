#include "curvecount/verification.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <sstream>

#include <json.hpp>

#include "curvecount/chern.hpp"
#include "curvecount/kontsevich.hpp"

namespace curvecount {

namespace {

constexpr CountQuery Q(int d, int m, int theta, int r) { return CountQuery{{d, m}, r, theta}; }

// Kontsevich numbers n_d, tabulated as the theta = 2, m = 0 slice.
constexpr std::array kKontsevich{
    GoldenRow{Q(3, 0, 2, 8), "12"},
    GoldenRow{Q(4, 0, 2, 11), "620"},
    GoldenRow{Q(5, 0, 2, 14), "87304"},
    GoldenRow{Q(6, 0, 2, 17), "26312976"},
    GoldenRow{Q(7, 0, 2, 20), "14616808192"},
    GoldenRow{Q(8, 0, 2, 23), "13525751027392"},
};

constexpr std::array kNodesFree{
    GoldenRow{Q(3, 2, 0, 8), "12"},
    GoldenRow{Q(4, 2, 0, 11), "1860"},
    GoldenRow{Q(5, 2, 0, 14), "523824"},
    GoldenRow{Q(6, 2, 0, 17), "263129760"},
    GoldenRow{Q(7, 2, 0, 20), "219252122880"},
    GoldenRow{Q(8, 2, 0, 23), "284040771575232"},
};

constexpr std::array kNodesLine{
    GoldenRow{Q(3, 2, 1, 7), "6"},
    GoldenRow{Q(4, 2, 1, 10), "768"},
    GoldenRow{Q(5, 2, 1, 13), "181320"},
    GoldenRow{Q(6, 2, 1, 16), "78076800"},
    GoldenRow{Q(7, 2, 1, 19), "56831124000"},
    GoldenRow{Q(8, 2, 1, 22), "65305557682176"},
};

constexpr std::array kNodesPoint{
    GoldenRow{Q(3, 2, 2, 6), "1"},
    GoldenRow{Q(4, 2, 2, 9), "96"},
    GoldenRow{Q(5, 2, 2, 12), "18132"},
    GoldenRow{Q(6, 2, 2, 15), "6506400"},
    GoldenRow{Q(7, 2, 2, 18), "4059366000"},
    GoldenRow{Q(8, 2, 2, 21), "4081597355136"},
};

constexpr std::array kTripleFree{
    GoldenRow{Q(4, 3, 0, 10), "60"},
    GoldenRow{Q(5, 3, 0, 13), "56400"},
    GoldenRow{Q(6, 3, 0, 16), "49177440"},
    GoldenRow{Q(7, 3, 0, 19), "56784765120"},
    GoldenRow{Q(8, 3, 0, 22), "91466185097280"},
};

constexpr std::array kTripleLine{
    GoldenRow{Q(4, 3, 1, 9), "12"},
    GoldenRow{Q(5, 3, 1, 12), "9600"},
    GoldenRow{Q(6, 3, 1, 15), "7221096"},
    GoldenRow{Q(7, 3, 1, 18), "7307731200"},
    GoldenRow{Q(8, 3, 1, 21), "10461017642880"},
};

constexpr std::array kTriplePoint{
    GoldenRow{Q(4, 3, 2, 8), "1"},
    GoldenRow{Q(5, 3, 2, 11), "640"},
    GoldenRow{Q(6, 3, 2, 14), "401172"},
    GoldenRow{Q(7, 3, 2, 17), "347987200"},
    GoldenRow{Q(8, 3, 2, 20), "435875735120"},
};

constexpr std::array kMfoldTheta0{
    GoldenRow{Q(4, 3, 0, 10), "60"},
    GoldenRow{Q(5, 4, 0, 12), "180"},
    GoldenRow{Q(6, 5, 0, 14), "420"},
    GoldenRow{Q(7, 6, 0, 16), "840"},
    GoldenRow{Q(8, 7, 0, 18), "1512"},
    GoldenRow{Q(9, 8, 0, 20), "2520"},
};

constexpr std::array kMfoldTheta1{
    GoldenRow{Q(4, 3, 1, 9), "12"},
    GoldenRow{Q(5, 4, 1, 11), "20"},
    GoldenRow{Q(6, 5, 1, 13), "30"},
    GoldenRow{Q(7, 6, 1, 15), "42"},
    GoldenRow{Q(8, 7, 1, 17), "56"},
    GoldenRow{Q(9, 8, 1, 19), "72"},
};

constexpr std::array kMfoldTheta2{
    GoldenRow{Q(4, 3, 2, 8), "1"},
    GoldenRow{Q(5, 4, 2, 10), "1"},
    GoldenRow{Q(6, 5, 2, 12), "1"},
    GoldenRow{Q(7, 6, 2, 14), "1"},
    GoldenRow{Q(8, 7, 2, 16), "1"},
    GoldenRow{Q(9, 8, 2, 18), "1"},
};

const std::array kTables{
    GoldenTable{"kontsevich", "rational plane curves through 3d-1 points", kKontsevich},
    GoldenTable{"nodes-free", "rational curves with a chosen node", kNodesFree},
    GoldenTable{"nodes-line", "node on a fixed line", kNodesLine},
    GoldenTable{"nodes-point", "node at a fixed point", kNodesPoint},
    GoldenTable{"triple-free", "rational curves with a triple point", kTripleFree},
    GoldenTable{"triple-line", "triple point on a fixed line", kTripleLine},
    GoldenTable{"triple-point", "triple point at a fixed point", kTriplePoint},
    GoldenTable{"mfold-theta0", "(d-1)-fold point, free", kMfoldTheta0},
    GoldenTable{"mfold-theta1", "(d-1)-fold point on a fixed line", kMfoldTheta1},
    GoldenTable{"mfold-theta2", "(d-1)-fold point at a fixed point", kMfoldTheta2},
};

std::string cell_label(const CountQuery& q) {
  std::ostringstream os;
  os << '(' << q.alpha.d << ',' << q.alpha.m << ',' << q.theta << ',' << q.r << ')';
  return os.str();
}

CheckResult make_check(std::string label, const CountQuery& q, ExactCount expected,
                       ExactCount computed) {
  CheckResult c{std::move(label), q, std::move(expected), std::move(computed), false};
  c.pass = c.expected == c.computed;
  return c;
}

}  // namespace

std::span<const GoldenTable> golden_tables() { return kTables; }

const GoldenTable& golden_table(std::string_view name) {
  for (const auto& t : kTables) {
    if (t.name == name) return t;
  }
  throw InvalidQuery("unknown table '" + std::string(name) + "'");
}

bool Section::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool VerifyReport::pass() const {
  return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.pass(); });
}

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& s : sections) {
    n += static_cast<std::size_t>(
        std::count_if(s.checks.begin(), s.checks.end(), [](const CheckResult& c) { return !c.pass; }));
  }
  return n;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  std::size_t total = 0;
  for (const auto& s : sections) {
    os << s.name << ": " << (s.pass() ? "PASS" : "FAIL") << '\n';
    for (const auto& c : s.checks) {
      ++total;
      os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.label << "  " << to_decimal(c.computed);
      if (!c.pass) os << "  (expected " << to_decimal(c.expected) << ')';
      os << '\n';
    }
  }
  os << (pass() ? "OK" : "FAILED") << ": " << total - failures() << '/' << total << " checks passed\n";
  return os.str();
}

std::string VerifyReport::to_json(int indent) const {
  using nlohmann::json;
  json doc;
  doc["pass"] = pass();
  doc["failures"] = failures();
  json secs = json::array();
  for (const auto& s : sections) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"label", c.label},
                        {"d", c.query.alpha.d},
                        {"m", c.query.alpha.m},
                        {"theta", c.query.theta},
                        {"r", c.query.r},
                        {"expected", to_decimal(c.expected)},
                        {"computed", to_decimal(c.computed)},
                        {"pass", c.pass}});
    }
    secs.push_back({{"name", s.name}, {"pass", s.pass()}, {"checks", std::move(checks)}});
  }
  doc["sections"] = std::move(secs);
  return doc.dump(indent) + "\n";
}

Section run_table(CountEngine& engine, std::string_view name) {
  const GoldenTable& table = golden_table(name);
  Section section{"table " + std::string(table.name), {}};
  for (const auto& row : table.rows) {
    section.checks.push_back(make_check(cell_label(row.query), row.query,
                                        parse_decimal(row.expected), engine.count(row.query)));
  }
  return section;
}

std::vector<Section> run_identities(CountEngine& engine, int max_d) {
  if (max_d < 1 || max_d > kMaxIdentityDegree) {
    throw InvalidQuery("identity degree bound must lie in 1.." + std::to_string(kMaxIdentityDegree));
  }
  KontsevichOracle plane;

  Section nodes{"node identity", {}};
  for (int d = 3; d <= max_d; ++d) {
    const CountQuery q{{d, 2}, 3 * d - 1, 0};
    const ExactCount expected = ExactCount((d - 1) * (d - 2) / 2) * plane.n_plane(d);
    nodes.checks.push_back(make_check("d=" + std::to_string(d), q, expected, engine.count(q)));
  }

  Section reduction{"plane reduction", {}};
  for (int d = 1; d <= max_d; ++d) {
    const CountQuery q{{d, 0}, 3 * d - 1, 2};
    reduction.checks.push_back(
        make_check("d=" + std::to_string(d), q, plane.n_plane(d), engine.blowup_gw({d, 0})));
  }

  Section chern{"chern agreement", {}};
  const int chern_max = std::min(max_d + 1, 9);
  for (int d = 4; d <= chern_max; ++d) {
    for (int theta = 0; theta <= 2; ++theta) {
      const CountQuery q{{d, d - 1}, 2 * d + 2 - theta, theta};
      chern.checks.push_back(make_check(cell_label(q), q, fixed_singularity_count(d, d - 1, theta),
                                        engine.count(q)));
    }
  }
  return {std::move(nodes), std::move(reduction), std::move(chern)};
}

Section audit_memo(const MemoStore& store, const SeedTable& seeds) {
  CountEngine fresh(CountEngine::Options{}, seeds);
  Section section{"memo audit", {}};
  for (const auto& [q, stored] : store.entries()) {
    section.checks.push_back(make_check(cell_label(q), q, stored, fresh.count(q)));
  }
  return section;
}

VerifyReport verify_all(CountEngine& engine, const VerifyOptions& options) {
  VerifyReport report;
  const auto tables = golden_tables();
  if (options.jobs > 1) {
    std::vector<std::future<Section>> pending;
    for (const auto& t : tables) {
      pending.push_back(std::async(std::launch::async, [&engine, name = t.name] {
        return run_table(engine, name);
      }));
    }
    for (auto& f : pending) report.sections.push_back(f.get());
  } else {
    for (const auto& t : tables) report.sections.push_back(run_table(engine, t.name));
  }
  const int max_d = options.deep ? kMaxIdentityDegree : kDefaultIdentityDegree;
  for (auto& s : run_identities(engine, max_d)) report.sections.push_back(std::move(s));
  return report;
}

}  // namespace curvecount
