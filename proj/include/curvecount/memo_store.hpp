#ifndef CURVECOUNT_MEMO_STORE_HPP
#define CURVECOUNT_MEMO_STORE_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvecount/count_query.hpp"
#include "curvecount/exact_count.hpp"

namespace curvecount {

class MemoConflict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MemoFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Map CountQuery -> ExactCount holding at most one value per key.
// Lookups and inserts are atomic per call, so several threads can share one
// store. Iteration order (and therefore the serialized form) is sorted by
// (d, m, r, theta).
//
// On-disk format:
//   {"version": 1, "entries": [{"d":..,"m":..,"r":..,"theta":..,"count":"<decimal>"}, ...]}
class MemoStore {
 public:
  static constexpr int kFormatVersion = 1;

  MemoStore() = default;
  MemoStore(const MemoStore& other);
  MemoStore& operator=(const MemoStore& other);

  std::optional<ExactCount> find(const CountQuery& q) const;

  // Inserting a key that is already present is a no-op when the value
  // matches and throws MemoConflict when it does not.
  void insert(const CountQuery& q, const ExactCount& value);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  void clear();
  std::vector<std::pair<CountQuery, ExactCount>> entries() const;

  std::string to_json(int indent = 1) const;
  static MemoStore from_json(const std::string& text);

  void save(const std::filesystem::path& path) const;
  static MemoStore load(const std::filesystem::path& path);

 private:
  mutable std::shared_mutex mutex_;
  std::map<CountQuery, ExactCount> entries_;
};

}  // namespace curvecount

#endif  // CURVECOUNT_MEMO_STORE_HPP
