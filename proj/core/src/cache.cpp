#include "hallbase/cache.hpp"

#include <filesystem>
#include <fstream>
#include <random>

#include "hallbase/errors.hpp"
#include "hallbase/serialize.hpp"

namespace hallbase {

namespace {

constexpr const char* kFormat = "hallbase-cache";

void check_header(const RepTheory& rt, const json& data) {
  if (!data.is_object() || data.value("format", "") != kFormat) throw InputError("not a hallbase cache file");
  if (!data.contains("version") || data["version"] != kCacheFormatVersion)
    throw InputError("stale cache format version " + data.value("version", json()).dump() + " (expected " +
                     std::to_string(kCacheFormatVersion) + "); delete the file to rebuild it");
  if (data.value("quiver", "") != rt.quiver().fingerprint())
    throw InputError("cache file belongs to a different quiver");
}

}  // namespace

json cache_to_json(const HallEngine& engine) {
  json out = engine.export_cache();
  out["format"] = kFormat;
  out["version"] = kCacheFormatVersion;
  out["quiver"] = engine.theory().quiver().fingerprint();
  return out;
}

void cache_from_json(HallEngine& engine, const json& data) {
  check_header(engine.theory(), data);
  engine.import_cache(data);
}

bool cache_load(HallEngine& engine, const std::string& path) {
  if (!std::filesystem::exists(path)) return false;
  std::ifstream in(path);
  if (!in) throw InputError("cannot read cache file " + path);
  json data;
  try {
    data = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("corrupt cache file " + path + ": " + e.what());
  }
  cache_from_json(engine, data);
  return true;
}

void cache_store(const HallEngine& engine, const std::string& path) {
  const auto tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write cache file " + path);
    out << cache_to_json(engine).dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

CacheCheck verify_cache(const RepTheory& rt, const json& data, std::size_t samples, std::uint32_t seed) {
  check_header(rt, data);
  HallEngine stored(rt);
  stored.import_cache(data);
  HallEngine fresh(rt);
  const auto& rows = data.at("rows");
  const auto& cols = data.at("columns");
  const std::size_t total = rows.size() + cols.size();
  CacheCheck out;
  if (total == 0) return out;
  std::mt19937 gen(seed);
  std::uniform_int_distribution<std::size_t> pick(0, total - 1);
  const auto& rs = rt.roots();
  auto partition = [&](const json& v) { return KostantPartition(v.get<std::vector<int>>()); };
  for (std::size_t s = 0; s < std::min(samples, total); ++s) {
    const std::size_t k = pick(gen);
    if (k < rows.size()) {
      const auto& r = rows[k];
      const auto lambda = partition(r.at("lambda"));
      const int j = r.at("j").get<int>(), e = r.at("e").get<int>();
      if (stored.layer_poly(lambda, j, e) != fresh.layer_poly(lambda, j, e))
        out.mismatches.push_back("row " + rs.label(lambda) + " j=" + std::to_string(j) + " e=" + std::to_string(e));
    } else {
      const auto& c = cols[k - rows.size()];
      const auto nu = partition(c.at("nu"));
      const int j = c.at("j").get<int>(), e = c.at("e").get<int>();
      if (stored.layer_column(j, e, nu) != fresh.layer_column(j, e, nu))
        out.mismatches.push_back("column j=" + std::to_string(j) + " e=" + std::to_string(e) + " " + rs.label(nu));
    }
    ++out.checked;
  }
  return out;
}

}  // namespace hallbase
