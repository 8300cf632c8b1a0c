// curvecount: exact counts of rational plane curves with an m-fold point.
//
//   curvecount count -d 4 -m 3
//   curvecount table --preset triple-free --format csv
//   curvecount verify --deep
//   curvecount oracle chern -d 7 -m 6 --theta 0

#include <cstdlib>
#include <filesystem>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvecount/chern.hpp"
#include "curvecount/family_recursion.hpp"
#include "curvecount/kontsevich.hpp"
#include "curvecount/memo_store.hpp"
#include "curvecount/verification.hpp"

namespace fs = std::filesystem;
using namespace curvecount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kDegreeGuard = 12;
constexpr const char* kCacheDirEnv = "CURVECOUNT_CACHE_DIR";

enum class OutputFormat { table, json, csv };
enum class CacheMode { read_write, read_only, disabled };

struct CacheConfig {
  std::optional<fs::path> path;
  CacheMode mode = CacheMode::read_write;
};

struct Record {
  int d, m, theta, r;
  std::string count;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_records(std::ostream& os, const std::vector<Record>& rows, OutputFormat fmt, bool single) {
  switch (fmt) {
    case OutputFormat::json: {
      auto to_json = [](const Record& r) {
        return nlohmann::ordered_json{
            {"d", r.d}, {"m", r.m}, {"theta", r.theta}, {"r", r.r}, {"count", r.count}};
      };
      if (single && rows.size() == 1) {
        os << to_json(rows.front()).dump() << '\n';
      } else {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        os << arr.dump(2) << '\n';
      }
      break;
    }
    case OutputFormat::csv:
      os << "d,m,theta,r,count\n";
      for (const auto& r : rows) {
        os << r.d << ',' << r.m << ',' << r.theta << ',' << r.r << ',' << r.count << '\n';
      }
      break;
    case OutputFormat::table: {
      std::size_t width = 5;
      for (const auto& r : rows) width = std::max(width, r.count.size());
      os << std::setw(4) << "d" << std::setw(5) << "m" << std::setw(7) << "theta" << std::setw(5)
         << "r" << "  " << std::setw(static_cast<int>(width)) << "count" << '\n';
      for (const auto& r : rows) {
        os << std::setw(4) << r.d << std::setw(5) << r.m << std::setw(7) << r.theta << std::setw(5)
           << r.r << "  " << std::setw(static_cast<int>(width)) << r.count << '\n';
      }
      break;
    }
  }
}

void check_degree(int d, bool unsafe) {
  if (d > kDegreeGuard && !unsafe) {
    throw UsageError("degree " + std::to_string(d) + " exceeds the guard d <= " +
                     std::to_string(kDegreeGuard) + " (pass --unsafe-degree to override)");
  }
}

CacheConfig resolve_cache(const std::string& path_flag, CacheMode mode) {
  CacheConfig cfg;
  cfg.mode = mode;
  if (!path_flag.empty()) {
    cfg.path = path_flag;
  } else if (const char* dir = std::getenv(kCacheDirEnv); dir != nullptr && *dir != '\0') {
    cfg.path = fs::path(dir) / "memo.json";
  }
  return cfg;
}

bool cache_active(const CacheConfig& cfg) { return cfg.path && cfg.mode != CacheMode::disabled; }

// Returns true if entries were loaded.
bool load_cache(CountEngine& engine, const CacheConfig& cfg) {
  if (!cache_active(cfg) || !fs::exists(*cfg.path)) return false;
  engine.memo() = MemoStore::load(*cfg.path);
  return true;
}

void save_cache(const CountEngine& engine, const CacheConfig& cfg) {
  if (cache_active(cfg) && cfg.mode == CacheMode::read_write) engine.memo().save(*cfg.path);
}

std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, re)) {
    throw UsageError("degree range must look like FROM..TO, got '" + text + "'");
  }
  const int lo = std::stoi(match[1]);
  const int hi = std::stoi(match[2]);
  if (lo > hi) throw UsageError("empty degree range '" + text + "'");
  return {lo, hi};
}

std::pair<CountQuery, ExactCount> parse_seed(const std::string& text) {
  static const std::regex re(R"(^(-?\d+),(-?\d+),(\d+),(\d+)=(-?\d+)$)");
  std::smatch match;
  if (!std::regex_match(text, match, re)) {
    throw UsageError("seed override must look like d,m,r,theta=value, got '" + text + "'");
  }
  CountQuery q{{std::stoi(match[1]), std::stoi(match[2])}, std::stoi(match[3]), std::stoi(match[4])};
  return {q, parse_decimal(match[5].str())};
}

std::vector<Record> compute_rows(CountEngine& engine, const std::vector<CountQuery>& queries, int jobs) {
  std::vector<Record> rows(queries.size());
  auto fill = [&](std::size_t i) {
    const auto& q = queries[i];
    rows[i] = Record{q.alpha.d, q.alpha.m, q.theta, q.r, to_decimal(engine.count(q))};
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < queries.size(); ++i) fill(i);
    return rows;
  }
  // Rows land in their own slots, so output order is by degree whatever the
  // completion order.
  std::vector<std::future<void>> pending;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    pending.push_back(std::async(std::launch::async, fill, i));
    if (pending.size() >= static_cast<std::size_t>(jobs)) {
      for (auto& f : pending) f.get();
      pending.clear();
    }
  }
  for (auto& f : pending) f.get();
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of rational plane curves with an m-fold singular point"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  std::string cache_path;
  std::string cache_mode_name = "read-write";
  bool unsafe_degree = false;
  int jobs = 1;

  const std::map<std::string, OutputFormat> format_names{
      {"table", OutputFormat::table}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
  const std::map<std::string, CacheMode> mode_names{{"read-write", CacheMode::read_write},
                                                    {"read-only", CacheMode::read_only},
                                                    {"disabled", CacheMode::disabled}};
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache", cache_path,
                 std::string("Memo cache file (default: $") + kCacheDirEnv + "/memo.json if set)");
  app.add_option("--cache-mode", cache_mode_name, "How the cache file is used")
      ->check(CLI::IsMember({"read-write", "read-only", "disabled"}))
      ->capture_default_str();
  app.add_flag("--unsafe-degree", unsafe_degree, "Allow degrees above 12");
  app.add_option("-j,--jobs", jobs, "Worker threads for independent rows")->check(CLI::Range(1, 256));

  // count
  auto* count_cmd = app.add_subcommand("count", "Count curves of degree d with an m-fold point");
  int count_d = 0, count_m = 0, count_theta = 0;
  std::optional<int> count_r;
  count_cmd->add_option("-d,--degree", count_d, "Degree d")->required();
  count_cmd->add_option("-m,--multiplicity", count_m, "Multiplicity m of the singular point")->required();
  count_cmd->add_option("-t,--theta", count_theta, "Codimension of the constraint on the singular point")
      ->check(CLI::NonNegativeNumber);
  count_cmd->add_option("-r,--r", count_r, "Number of point constraints (default 3d+1-m-theta)");

  // table
  auto* table_cmd = app.add_subcommand("table", "Tabulate counts over a range of degrees");
  std::string preset;
  int table_m = 0, table_theta = 0;
  std::string d_range;
  auto* preset_opt = table_cmd->add_option("-p,--preset", preset, "Published table to reproduce");
  auto* m_opt = table_cmd->add_option("-m,--multiplicity", table_m, "Multiplicity m");
  table_cmd->add_option("-t,--theta", table_theta, "Theta")->check(CLI::NonNegativeNumber);
  auto* range_opt = table_cmd->add_option("--d-range", d_range, "Degrees FROM..TO");
  preset_opt->excludes(m_opt)->excludes(range_opt);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check all published tables and cross-oracle identities");
  bool deep = false;
  std::vector<std::string> seed_overrides;
  verify_cmd->add_flag("--deep", deep, "Extend identity checks to degree 10");
  verify_cmd->add_option("--override-seed", seed_overrides, "Replace a seed value (d,m,r,theta=value)")
      ->group("");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Evaluate an independent oracle");
  oracle_cmd->require_subcommand(1);
  auto* kontsevich_cmd = oracle_cmd->add_subcommand("kontsevich", "Classical count n_d of rational plane curves");
  int oracle_d = 0;
  kontsevich_cmd->add_option("-d,--degree", oracle_d, "Degree d")->required();
  auto* chern_cmd = oracle_cmd->add_subcommand("chern", "Euler-class count with an m-fold point");
  int chern_d = 0, chern_m = 0, chern_theta = 0;
  chern_cmd->add_option("-d,--degree", chern_d, "Degree d")->required();
  chern_cmd->add_option("-m,--multiplicity", chern_m, "Multiplicity m")->required();
  chern_cmd->add_option("-t,--theta", chern_theta, "Theta (0, 1 or 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  const OutputFormat format = format_names.at(format_name);
  const CacheMode cache_mode = mode_names.at(cache_mode_name);

  try {
    const CacheConfig cache = resolve_cache(cache_path, cache_mode);

    if (*count_cmd) {
      const CurveClass alpha{count_d, count_m};
      if (alpha.is_zero()) throw UsageError("curve class (0,0) is not allowed (need d != 0 or m != 0)");
      check_degree(count_d, unsafe_degree);
      const int r = count_r.value_or(expected_points(alpha, count_theta));
      if (r < 0) {
        throw UsageError("computed r = 3d+1-m-theta = " + std::to_string(r) + " is negative");
      }
      CountEngine engine;
      load_cache(engine, cache);
      const ExactCount value = engine.count(CountQuery{alpha, r, count_theta});
      save_cache(engine, cache);
      print_records(std::cout, {{count_d, count_m, count_theta, r, to_decimal(value)}}, format, true);
      return kExitOk;
    }

    if (*table_cmd) {
      std::vector<CountQuery> queries;
      if (!preset.empty()) {
        for (const auto& row : golden_table(preset).rows) queries.push_back(row.query);
      } else {
        if (m_opt->count() == 0 || range_opt->count() == 0) {
          throw UsageError("table needs either --preset or both -m and --d-range");
        }
        const auto [lo, hi] = parse_range(d_range);
        check_degree(hi, unsafe_degree);
        for (int d = lo; d <= hi; ++d) {
          const CurveClass alpha{d, table_m};
          if (alpha.is_zero()) throw UsageError("degree range includes the class (0,0)");
          const int r = expected_points(alpha, table_theta);
          if (r < 0) {
            throw UsageError("computed r is negative at d = " + std::to_string(d));
          }
          queries.push_back(CountQuery{alpha, r, table_theta});
        }
      }
      CountEngine engine;
      load_cache(engine, cache);
      const auto rows = compute_rows(engine, queries, jobs);
      save_cache(engine, cache);
      print_records(std::cout, rows, format, false);
      return kExitOk;
    }

    if (*verify_cmd) {
      SeedTable seeds = default_seeds();
      for (const auto& s : seed_overrides) {
        auto [q, v] = parse_seed(s);
        seeds[q] = v;
      }
      const bool overridden = !seed_overrides.empty();
      CountEngine engine(CountEngine::Options{}, seeds);
      bool loaded = false;
      if (!overridden) loaded = load_cache(engine, cache);
      VerifyReport report;
      if (loaded) report.sections.push_back(audit_memo(engine.memo()));
      auto main_report = verify_all(engine, VerifyOptions{deep, jobs});
      for (auto& s : main_report.sections) report.sections.push_back(std::move(s));
      if (!overridden && report.pass()) save_cache(engine, cache);
      if (format == OutputFormat::json) {
        std::cout << report.to_json();
      } else {
        std::cout << report.to_text();
      }
      return report.pass() ? kExitOk : kExitMismatch;
    }

    if (*oracle_cmd) {
      if (*kontsevich_cmd) {
        if (oracle_d <= 0) throw UsageError("degree must be positive");
        check_degree(oracle_d, unsafe_degree);
        const ExactCount v = n_plane(oracle_d);
        print_records(std::cout, {{oracle_d, 0, 2, 3 * oracle_d - 1, to_decimal(v)}}, format, true);
        return kExitOk;
      }
      if (chern_d <= 0) throw UsageError("degree must be positive");
      if (chern_m < 2) throw UsageError("multiplicity must be at least 2");
      if (chern_theta < 0 || chern_theta > 2) throw UsageError("theta must be 0, 1 or 2");
      check_degree(chern_d, unsafe_degree);
      const ExactCount v = fixed_singularity_count(chern_d, chern_m, chern_theta);
      print_records(std::cout,
                    {{chern_d, chern_m, chern_theta, codim_j(chern_d, chern_m) - chern_theta, to_decimal(v)}},
                    format, true);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvalidQuery& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const MemoFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitInvalid;
}
