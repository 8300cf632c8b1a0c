#include "curvecount/memo_store.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace curvecount {

using json = nlohmann::json;

std::ostream& operator<<(std::ostream& os, const CountQuery& q) {
  return os << "N" << q.alpha << "(r=" << q.r << ", theta=" << q.theta << ')';
}

MemoStore::MemoStore(const MemoStore& other) {
  std::shared_lock lock(other.mutex_);
  entries_ = other.entries_;
}

MemoStore& MemoStore::operator=(const MemoStore& other) {
  if (this == &other) return *this;
  std::map<CountQuery, ExactCount> copy;
  {
    std::shared_lock lock(other.mutex_);
    copy = other.entries_;
  }
  std::unique_lock lock(mutex_);
  entries_ = std::move(copy);
  return *this;
}

std::optional<ExactCount> MemoStore::find(const CountQuery& q) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(q);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void MemoStore::insert(const CountQuery& q, const ExactCount& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(q, value);
  if (!inserted && it->second != value) {
    std::ostringstream msg;
    msg << "memo conflict at " << q << ": stored " << to_decimal(it->second) << ", new "
        << to_decimal(value);
    throw MemoConflict(msg.str());
  }
}

std::size_t MemoStore::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void MemoStore::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

std::vector<std::pair<CountQuery, ExactCount>> MemoStore::entries() const {
  std::shared_lock lock(mutex_);
  return {entries_.begin(), entries_.end()};
}

std::string MemoStore::to_json(int indent) const {
  json doc;
  doc["version"] = kFormatVersion;
  json list = json::array();
  for (const auto& [q, v] : entries()) {
    list.push_back({{"d", q.alpha.d},
                    {"m", q.alpha.m},
                    {"r", q.r},
                    {"theta", q.theta},
                    {"count", to_decimal(v)}});
  }
  doc["entries"] = std::move(list);
  return doc.dump(indent) + "\n";
}

MemoStore MemoStore::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MemoFormatError(std::string("memo cache is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer()) {
    throw MemoFormatError("memo cache has no integer \"version\" field");
  }
  if (doc["version"].get<int>() != kFormatVersion) {
    throw MemoFormatError("unsupported memo cache version " + doc["version"].dump());
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw MemoFormatError("memo cache has no \"entries\" array");
  }
  MemoStore store;
  for (const auto& e : doc["entries"]) {
    try {
      CountQuery q{{e.at("d").get<int>(), e.at("m").get<int>()},
                   e.at("r").get<int>(),
                   e.at("theta").get<int>()};
      if (!e.at("count").is_string()) {
        throw MemoFormatError("count must be a decimal string");
      }
      store.insert(q, parse_decimal(e.at("count").get<std::string>()));
    } catch (const json::exception& ex) {
      throw MemoFormatError(std::string("malformed memo entry: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
      throw MemoFormatError(std::string("malformed memo entry: ") + ex.what());
    } catch (const MemoConflict& ex) {
      throw MemoFormatError(std::string("duplicate memo entry: ") + ex.what());
    }
  }
  return store;
}

void MemoStore::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  // Write next to the target and rename so readers never see a partial file.
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write memo cache " + tmp.string());
    out << to_json();
    if (!out) throw std::runtime_error("failed writing memo cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

MemoStore MemoStore::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read memo cache " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

}  // namespace curvecount
