#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hallbase/hall.hpp"

namespace hallbase {

inline constexpr int kCacheFormatVersion = 1;

/// {"format": "hallbase-cache", "version": 1, "quiver": fingerprint, "rows": [...], "columns": [...]}
nlohmann::json cache_to_json(const HallEngine& engine);
/// Rejects other formats, stale versions and foreign quivers with InputError.
void cache_from_json(HallEngine& engine, const nlohmann::json& data);

/// Returns false when the file does not exist.
bool cache_load(HallEngine& engine, const std::string& path);
void cache_store(const HallEngine& engine, const std::string& path);

struct CacheCheck {
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
};

/// Recomputes `samples` entries chosen with a seeded generator on a fresh
/// engine and compares them with the stored values.
CacheCheck verify_cache(const RepTheory& rt, const nlohmann::json& data, std::size_t samples = 3,
                        std::uint32_t seed = 20240611);

}  // namespace hallbase
