#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "turanlab/search.hpp"
#include "turanlab/version.hpp"

// Append-only, line-delimited store of extremal-search results.

namespace turanlab {

inline constexpr const char* kCacheEnvVar = "TURANLAB_CACHE";
inline constexpr const char* kDefaultCachePath = "./turanlab-cache.jsonl";

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CacheKey {
  std::string predicate;
  int n = 0;
  int r = 0;
  int ell = 0;
  bool operator==(const CacheKey&) const = default;
};

struct CacheEntry {
  CacheKey key;
  std::uint64_t value = 0;
  std::uint64_t extremal_classes = 0;
  bool complete = false;
  std::string tool_version = kToolVersion;
  std::string timestamp;
  std::uint64_t nodes_explored = 0;
  std::uint64_t initial_upper_bound = 0;
  double runtime_seconds = 0.0;
  std::string ordering;
  int symmetry_depth = 0;
  int threads = 0;
  bool operator==(const CacheEntry&) const = default;
};

inline std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline CacheEntry make_cache_entry(const ExtremalRecord& rec, int ell, const SearchConfig& config) {
  CacheEntry e;
  e.key = {rec.predicate, rec.n, rec.r, ell};
  e.value = rec.value;
  e.extremal_classes = rec.extremal_classes;
  e.complete = rec.complete;
  e.timestamp = utc_timestamp();
  e.nodes_explored = rec.nodes_explored;
  e.initial_upper_bound = rec.initial_upper_bound;
  e.runtime_seconds = rec.runtime_seconds;
  e.ordering = ordering_name(config.ordering);
  e.symmetry_depth = config.symmetry_depth;
  e.threads = config.thread_count;
  return e;
}

inline nlohmann::ordered_json to_json(const CacheEntry& e) {
  return {{"key", {{"predicate", e.key.predicate}, {"n", e.key.n}, {"r", e.key.r}, {"ell", e.key.ell}}},
          {"value", e.value},
          {"extremal_classes", e.extremal_classes},
          {"complete", e.complete},
          {"tool_version", e.tool_version},
          {"timestamp", e.timestamp},
          {"stats",
           {{"nodes_explored", e.nodes_explored},
            {"initial_upper_bound", e.initial_upper_bound},
            {"runtime_seconds", e.runtime_seconds},
            {"ordering", e.ordering},
            {"symmetry_depth", e.symmetry_depth},
            {"threads", e.threads}}}};
}

inline CacheEntry cache_entry_from_json(const nlohmann::json& j) {
  CacheEntry e;
  const auto& k = j.at("key");
  e.key = {k.at("predicate").get<std::string>(), k.at("n").get<int>(), k.at("r").get<int>(), k.at("ell").get<int>()};
  e.value = j.at("value").get<std::uint64_t>();
  e.extremal_classes = j.at("extremal_classes").get<std::uint64_t>();
  e.complete = j.at("complete").get<bool>();
  e.tool_version = j.at("tool_version").get<std::string>();
  e.timestamp = j.at("timestamp").get<std::string>();
  const auto& s = j.at("stats");
  e.nodes_explored = s.at("nodes_explored").get<std::uint64_t>();
  e.initial_upper_bound = s.at("initial_upper_bound").get<std::uint64_t>();
  e.runtime_seconds = s.at("runtime_seconds").get<double>();
  e.ordering = s.at("ordering").get<std::string>();
  e.symmetry_depth = s.at("symmetry_depth").get<int>();
  e.threads = s.at("threads").get<int>();
  return e;
}

// Explicit path, else $TURANLAB_CACHE, else ./turanlab-cache.jsonl.
inline std::string resolve_cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return env;
  return kDefaultCachePath;
}

class ResultCache {
public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}

  const std::string& path() const { return path_; }

  // Newest complete entry for `key`. Unparseable lines are skipped and noted in warnings().
  std::optional<CacheEntry> lookup(const CacheKey& key) {
    std::optional<CacheEntry> found;
    for (auto& e : entries())
      if (e.complete && e.key == key) found = std::move(e);
    return found;
  }

  std::vector<CacheEntry> entries() {
    warnings_.clear();
    std::vector<CacheEntry> out;
    std::ifstream in(path_);
    if (!in) return out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        out.push_back(cache_entry_from_json(nlohmann::json::parse(line)));
      } catch (const std::exception& ex) {
        warnings_.push_back(path_ + ":" + std::to_string(lineno) + ": skipped corrupt cache line (" + ex.what() + ")");
      }
    }
    return out;
  }

  void store(const CacheEntry& entry) {
    static std::mutex writer;
    std::lock_guard lock(writer);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw CacheError("cannot open cache store '" + path_ + "' for appending");
    out << to_json(entry).dump() << '\n';
    out.flush();
    if (!out) throw CacheError("write to cache store '" + path_ + "' failed");
  }

  const std::vector<std::string>& warnings() const { return warnings_; }

private:
  std::string path_;
  std::vector<std::string> warnings_;
};

}  // namespace turanlab
