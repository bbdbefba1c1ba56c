#pragma once

/// @file cache_file.hpp
/// @brief Persistence of a CountCache as a versioned JSON document with sorted
/// keys and decimal-string values, so that load followed by save reproduces
/// the file byte for byte.
///
///     {
///       "entries": {
///         "catalan/-/3": "5",
///         "y/3/4": "9"
///       },
///       "format": "sytlab-count-cache",
///       "version": 1
///     }

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sytlab/bigint.hpp"
#include "sytlab/enumeration.hpp"
#include "sytlab/errors.hpp"

namespace sytlab {

inline constexpr int kCacheVersion = 1;
inline constexpr const char* kCacheFormat = "sytlab-count-cache";

/// "family/k/n", with "-" standing in for an absent k.
inline std::string cache_key(const CountQuery& q) {
  return std::string(family_name(q.family)) + "/" + (q.k ? std::to_string(*q.k) : "-") + "/" + std::to_string(q.n);
}

inline CountQuery parse_cache_key(const std::string& key) {
  auto first = key.find('/');
  auto second = first == std::string::npos ? std::string::npos : key.find('/', first + 1);
  if (second == std::string::npos) throw ParseError("malformed cache key '" + key + "'");
  auto family = parse_family(key.substr(0, first));
  if (!family) throw ParseError("unknown family in cache key '" + key + "'");

  auto number = [&](const std::string& text) -> std::size_t {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("malformed number in cache key '" + key + "'");
    }
    return std::stoull(text);
  };
  CountQuery q;
  q.family = *family;
  auto k_text = key.substr(first + 1, second - first - 1);
  if (k_text != "-") q.k = number(k_text);
  q.n = number(key.substr(second + 1));
  try {
    q.validate();
  } catch (const PreconditionError& e) {
    throw ParseError("cache key '" + key + "': " + e.what());
  }
  return q;
}

inline std::string serialize_cache(const CountCache& cache) {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [q, value] : cache.snapshot()) entries[cache_key(q)] = to_decimal(value);
  nlohmann::json doc;
  doc["format"] = kCacheFormat;
  doc["version"] = kCacheVersion;
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

inline CountCache deserialize_cache(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("cache file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kCacheFormat) throw ParseError("not a count cache document");
  if (!doc.contains("version") || doc["version"] != kCacheVersion) {
    throw ParseError("unsupported cache version (expected " + std::to_string(kCacheVersion) + ")");
  }
  if (!doc.contains("entries") || !doc["entries"].is_object()) throw ParseError("cache document has no entries object");

  CountCache cache;
  for (const auto& [key, value] : doc["entries"].items()) {
    if (!value.is_string()) throw ParseError("cache value for '" + key + "' must be a decimal string");
    BigInt parsed;
    try {
      parsed = from_decimal(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError("cache value for '" + key + "': " + e.what());
    }
    if (parsed < 0) throw ParseError("cache value for '" + key + "' is negative");
    cache.insert(parse_cache_key(key), std::move(parsed));
  }
  return cache;
}

/// Entries whose stored value differs from a fresh computation.
inline std::vector<CountQuery> find_cache_mismatches(const CountCache& cache) {
  std::vector<CountQuery> bad;
  for (const auto& [q, value] : cache.snapshot()) {
    if (compute_count(q) != value) bad.push_back(q);
  }
  return bad;
}

inline CountCache load_cache_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open cache file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return deserialize_cache(buffer.str());
}

inline void save_cache_file(const CountCache& cache, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache file '" + path + "'");
  out << serialize_cache(cache);
}

}  // namespace sytlab
