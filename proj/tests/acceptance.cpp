// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact integer equality; time budgets are wall-clock on a single core.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "curvecount/chern.hpp"
#include "curvecount/family_recursion.hpp"
#include "curvecount/kontsevich.hpp"
#include "curvecount/memo_store.hpp"
#include "curvecount/verification.hpp"

using namespace curvecount;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Cell {
  int d, m, theta, r;
  const char* value;
};

std::string label(const Cell& c) {
  std::ostringstream os;
  os << '(' << c.d << ',' << c.m << ',' << c.theta << ',' << c.r << ')';
  return os.str();
}

Outcome check_cells(const std::vector<Cell>& cells) {
  CountEngine engine;
  Outcome out;
  for (const auto& c : cells) {
    const ExactCount got = engine.count({{c.d, c.m}, c.r, c.theta});
    out.expect(got == ExactCount(c.value), label(c) + " gave " + to_decimal(got) + ", expected " + c.value);
  }
  if (out.pass) out.detail = std::to_string(cells.size()) + " cells";
  return out;
}

Outcome kontsevich_table() {
  KontsevichOracle oracle;
  const std::vector<std::pair<int, const char*>> rows{
      {3, "12"}, {4, "620"}, {5, "87304"}, {6, "26312976"}, {7, "14616808192"}, {8, "13525751027392"}};
  Outcome out;
  for (const auto& [d, v] : rows) {
    out.expect(oracle.n_plane(d) == ExactCount(v), "n_" + std::to_string(d));
  }
  return out;
}

Outcome node_tables() {
  return check_cells({
      {3, 2, 0, 8, "12"},           {4, 2, 0, 11, "1860"},         {5, 2, 0, 14, "523824"},
      {6, 2, 0, 17, "263129760"},   {7, 2, 0, 20, "219252122880"}, {8, 2, 0, 23, "284040771575232"},
      {3, 2, 1, 7, "6"},            {4, 2, 1, 10, "768"},          {5, 2, 1, 13, "181320"},
      {6, 2, 1, 16, "78076800"},    {7, 2, 1, 19, "56831124000"},  {8, 2, 1, 22, "65305557682176"},
      {3, 2, 2, 6, "1"},            {4, 2, 2, 9, "96"},            {5, 2, 2, 12, "18132"},
      {6, 2, 2, 15, "6506400"},     {7, 2, 2, 18, "4059366000"},   {8, 2, 2, 21, "4081597355136"},
  });
}

Outcome triple_tables() {
  return check_cells({
      {4, 3, 0, 10, "60"},  {5, 3, 0, 13, "56400"}, {6, 3, 0, 16, "49177440"},
      {7, 3, 0, 19, "56784765120"}, {8, 3, 0, 22, "91466185097280"},
      {4, 3, 1, 9, "12"},   {5, 3, 1, 12, "9600"},  {6, 3, 1, 15, "7221096"},
      {7, 3, 1, 18, "7307731200"},  {8, 3, 1, 21, "10461017642880"},
      {4, 3, 2, 8, "1"},    {5, 3, 2, 11, "640"},   {6, 3, 2, 14, "401172"},
      {7, 3, 2, 17, "347987200"},   {8, 3, 2, 20, "435875735120"},
  });
}

Outcome mfold_tables() {
  return check_cells({
      {4, 3, 0, 10, "60"}, {5, 4, 0, 12, "180"}, {6, 5, 0, 14, "420"},
      {7, 6, 0, 16, "840"}, {8, 7, 0, 18, "1512"}, {9, 8, 0, 20, "2520"},
      {4, 3, 1, 9, "12"},  {5, 4, 1, 11, "20"},  {6, 5, 1, 13, "30"},
      {7, 6, 1, 15, "42"}, {8, 7, 1, 17, "56"},  {9, 8, 1, 19, "72"},
      {4, 3, 2, 8, "1"},   {5, 4, 2, 10, "1"},   {6, 5, 2, 12, "1"},
      {7, 6, 2, 14, "1"},  {8, 7, 2, 16, "1"},   {9, 8, 2, 18, "1"},
  });
}

Outcome node_identity() {
  CountEngine engine;
  KontsevichOracle oracle;
  Outcome out;
  for (int d = 3; d <= 8; ++d) {
    const ExactCount lhs = engine.count({{d, 2}, 3 * d - 1, 0});
    const ExactCount rhs = ExactCount((d - 1) * (d - 2) / 2) * oracle.n_plane(d);
    out.expect(lhs == rhs, "d=" + std::to_string(d));
  }
  return out;
}

Outcome plane_reduction() {
  CountEngine engine;
  KontsevichOracle oracle;
  Outcome out;
  for (int d = 1; d <= 8; ++d) {
    out.expect(engine.blowup_gw({d, 0}) == oracle.n_plane(d), "d=" + std::to_string(d));
  }
  return out;
}

Outcome chern_agreement() {
  CountEngine engine;
  Outcome out;
  for (int d = 4; d <= 9; ++d) {
    for (int theta = 0; theta <= 2; ++theta) {
      const ExactCount euler = fixed_singularity_count(d, d - 1, theta);
      const ExactCount rec = engine.count({{d, d - 1}, 2 * d + 2 - theta, theta});
      out.expect(euler == rec, "d=" + std::to_string(d) + " theta=" + std::to_string(theta) + ": " +
                                   to_decimal(euler) + " vs " + to_decimal(rec));
    }
  }
  return out;
}

Outcome euler_expansions() {
  // c1^(k+1) + A c1^k alpha1 + c1^(k-1)(B alpha1^2 + C beta2) for k = 0..7.
  struct Printed {
    int k, a, b, c;
  };
  const std::vector<Printed> printed{{0, 0, 0, 0},   {1, 1, 0, 1},    {2, 3, 2, 4},    {3, 6, 11, 10},
                                     {4, 10, 35, 20}, {5, 15, 85, 35}, {6, 21, 175, 56}, {7, 28, 322, 84}};
  Outcome out;
  for (const auto& p : printed) {
    for (int d = 1; d <= 9; ++d) {
      const int top = linear_system_dimension(d);
      const CohomClass a = CohomClass::a(top);
      const CohomClass c1 = CohomClass::y(top) + a * ExactCount(d);
      const CohomClass alpha1 = a * ExactCount(-3);
      const CohomClass beta2 = a.pow(2) * ExactCount(3);
      CohomClass expected = c1.pow(p.k + 1) + c1.pow(p.k) * alpha1 * ExactCount(p.a);
      if (p.k >= 1) expected += c1.pow(p.k - 1) * (alpha1.pow(2) * ExactCount(p.b) + beta2 * ExactCount(p.c));
      out.expect(euler_V(p.k, d) == expected, "e(V_" + std::to_string(p.k) + ") d=" + std::to_string(d));
    }
  }
  return out;
}

Outcome gate_zeroing() {
  CountEngine engine;
  Outcome out;
  for (int d = 1; d <= 8; ++d) {
    for (int m = -1; m <= d; ++m) {
      for (int theta = 0; theta <= 3; ++theta) {
        const int r = expected_points({d, m}, theta);
        for (int off : {-2, -1, 1, 2}) {
          if (r + off < 0) continue;
          out.expect(engine.count({{d, m}, r + off, theta}) == 0, "off-gate nonzero");
        }
      }
    }
  }
  return out;
}

Outcome recursion_depth() {
  CountEngine engine;
  Outcome out;
  std::size_t edges = 0, bad = 0;
  engine.set_edge_observer([&](const CountQuery& parent, const CountQuery& child) {
    ++edges;
    if (child.r >= parent.r) ++bad;
  });
  for (int theta = 0; theta <= 2; ++theta) {
    engine.count({{8, 3}, 22 - theta, theta});
    engine.count({{8, 2}, 23 - theta, theta});
  }
  out.expect(edges > 0, "no edges observed");
  out.expect(bad == 0, std::to_string(bad) + " edges did not decrease r");
  if (out.pass) out.detail = std::to_string(edges) + " edges";
  return out;
}

Outcome memo_on_off() {
  CountEngine memo;
  CountEngine plain(CountEngine::Options{false, kDefaultSplitWindow});
  Outcome out;
  for (int d = 1; d <= 4; ++d) {
    for (int m = -1; m <= d; ++m) {
      for (int theta = 0; theta <= 2; ++theta) {
        const int r = expected_points({d, m}, theta);
        if (r < 0) continue;
        out.expect(memo.count({{d, m}, r, theta}) == plain.count({{d, m}, r, theta}), "mismatch");
      }
    }
  }
  return out;
}

Outcome widened_window() {
  CountEngine narrow;
  CountEngine wide(CountEngine::Options{true, SplitWindow{2, 3}});
  Outcome out;
  for (int d = 1; d <= 5; ++d) {
    for (int m = -1; m <= d + 1; ++m) {
      for (int theta = 0; theta <= 2; ++theta) {
        const int r = expected_points({d, m}, theta);
        if (r < 0) continue;
        out.expect(narrow.count({{d, m}, r, theta}) == wide.count({{d, m}, r, theta}),
                   "d=" + std::to_string(d) + " m=" + std::to_string(m));
      }
    }
  }
  return out;
}

Outcome nonnegativity() {
  CountEngine engine;
  Outcome out;
  std::size_t n = 0;
  for (int d = 0; d <= 10; ++d) {
    for (int m = -2; m <= d + 1; ++m) {
      if (d == 0 && m == 0) continue;
      for (int theta = 0; theta <= 3; ++theta) {
        const int r = expected_points({d, m}, theta);
        if (r < 0) continue;
        ++n;
        out.expect(engine.count({{d, m}, r, theta}) >= 0, "negative count");
      }
    }
  }
  if (out.pass) out.detail = std::to_string(n) + " queries";
  return out;
}

Outcome base_completeness() {
  Outcome out;
  for (int d = -12; d <= 12; ++d) {
    for (int m = -13; m <= 13; ++m) {
      if (d == 0 && m == 0) continue;
      for (int theta = 0; theta <= 4; ++theta) {
        const int r = expected_points({d, m}, theta);
        if (r < 0 || r > 2) continue;
        out.expect(base_case({{d, m}, r, theta}).has_value(), "uncovered query");
      }
    }
  }
  return out;
}

Outcome cache_round_trip() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("curvecount_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const CountQuery q{{7, 3}, 19, 0};
  Outcome out;

  CountEngine first;
  const std::string record = to_decimal(first.count(q));
  first.memo().save(dir / "a.json");

  CountEngine restarted;
  restarted.memo() = MemoStore::load(dir / "a.json");
  out.expect(to_decimal(restarted.count(q)) == record, "recomputed value differs");
  restarted.memo().save(dir / "b.json");

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), {});
  };
  out.expect(slurp(dir / "a.json") == slurp(dir / "b.json"), "cache files differ");
  fs::remove_all(dir);
  return out;
}

Outcome deep_verify() {
  CountEngine engine;
  const VerifyReport report = verify_all(engine, VerifyOptions{true, 1});
  Outcome out;
  out.expect(report.pass(), std::to_string(report.failures()) + " failures");
  return out;
}

struct Criterion {
  std::string id;
  std::string name;
  std::function<Outcome()> run;
  double budget_seconds;  // <= 0 means no budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1", "Kontsevich table n_3..n_8", kontsevich_table, 1.0},
      {"2", "node tables (18 cells)", node_tables, 30.0},
      {"3", "triple-point tables (15 cells)", triple_tables, 60.0},
      {"4", "m = d-1 tables (18 cells)", mfold_tables, 10.0},
      {"5", "node identity d = 3..8", node_identity, 0},
      {"6", "plane reduction d = 1..8", plane_reduction, 0},
      {"7", "chern-oracle agreement d = 4..9", chern_agreement, 0},
      {"8", "Euler class expansions e(V_0)..e(V_7)", euler_expansions, 0},
      {"9a", "property: dimension-gate zeroing", gate_zeroing, 0},
      {"9b", "property: recursion r strictly decreasing", recursion_depth, 0},
      {"9c", "property: memo on/off equality", memo_on_off, 0},
      {"9d", "property: widened split window, d <= 5", widened_window, 0},
      {"9e", "property: nonnegativity, d <= 10", nonnegativity, 0},
      {"9f", "property: base-case completeness sweep", base_completeness, 0},
      {"9g", "property: cache round-trip byte identity", cache_round_trip, 0},
      {"10", "verify --deep wall-clock", deep_verify, 120.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      out.pass = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += "over budget " + std::to_string(c.budget_seconds) + " s";
    }
    if (!out.pass) ++failed;
    std::printf("[%s] criterion %-3s %-45s %8.3f s%s%s\n", out.pass ? "PASS" : "FAIL", c.id.c_str(),
                c.name.c_str(), secs, out.detail.empty() ? "" : "  ", out.detail.c_str());
  }
  std::printf("%s: %zu/%zu criteria passed\n", failed == 0 ? "OK" : "FAILED", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
