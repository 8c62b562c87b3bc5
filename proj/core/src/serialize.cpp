#include "hallbase/serialize.hpp"

#include <limits>

#include "hallbase/errors.hpp"

namespace hallbase {

json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                    s != "-";
    if (!ok) throw InputError("'" + s + "' is not an integer");
    return BigInt(s);
  }
  throw InputError("expected an integer, got " + j.dump());
}

json partition_to_json(const KostantPartition& p) {
  json out = json::object();
  for (std::size_t i = 0; i < p.root_count(); ++i)
    if (p[i] != 0) out[std::to_string(i + 1)] = p[i];
  return out;
}

KostantPartition partition_from_json(const RootSystem& rs, const json& j) {
  if (!j.is_object()) throw InputError("partition must be a JSON object mapping root index to multiplicity");
  KostantPartition p = rs.zero();
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int idx = 0;
    try {
      idx = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || idx < 1 || idx > static_cast<int>(rs.size()))
      throw InputError("partition key '" + key + "' is not a root index in 1.." + std::to_string(rs.size()));
    if (!value.is_number_integer() || value.get<long long>() < 0 || value.get<long long>() > 1000)
      throw InputError("multiplicity of root " + key + " must be a non-negative integer");
    p[static_cast<std::size_t>(idx - 1)] = value.get<int>();
  }
  return p;
}

KostantPartition parse_partition(const RootSystem& rs, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed partition JSON: ") + e.what());
  }
  return partition_from_json(rs, j);
}

json intpoly_to_json(const IntPoly& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(bigint_to_json(x));
  return {{"coeffs", c}};
}

IntPoly intpoly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw InputError("polynomial must look like {\"coeffs\": [...]}");
  std::vector<BigInt> c;
  for (const auto& x : j["coeffs"]) c.push_back(bigint_from_json(x));
  return IntPoly(std::move(c));
}

json laurent_to_json(const LaurentPoly& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(bigint_to_json(x));
  return {{"lo", p.lo()}, {"coeffs", c}};
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lo") || !j["lo"].is_number_integer() || !j.contains("coeffs") ||
      !j["coeffs"].is_array())
    throw InputError("Laurent polynomial must look like {\"lo\": k, \"coeffs\": [...]}");
  std::vector<BigInt> c;
  for (const auto& x : j["coeffs"]) c.push_back(bigint_from_json(x));
  return LaurentPoly(j["lo"].get<int>(), std::move(c));
}

json polymap_to_json(const RootSystem& rs, const std::map<KostantPartition, IntPoly>& m) {
  json out = json::array();
  for (const auto& [lambda, p] : m)
    out.push_back({{"partition", partition_to_json(lambda)}, {"label", rs.label(lambda)}, {"poly", intpoly_to_json(p)}});
  return out;
}

json uplus_to_json(const RootSystem& rs, const UPlusElement& u) {
  json out = json::array();
  for (const auto& [lambda, c] : u)
    out.push_back({{"partition", partition_to_json(lambda)}, {"label", rs.label(lambda)}, {"laurent", laurent_to_json(c)}});
  return out;
}

UPlusElement uplus_from_json(const RootSystem& rs, const json& j) {
  if (!j.is_array()) throw InputError("U+ element must be a JSON array");
  UPlusElement out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("partition") || !term.contains("laurent"))
      throw InputError("U+ term needs \"partition\" and \"laurent\"");
    auto c = laurent_from_json(term["laurent"]);
    if (!c.is_zero()) out[partition_from_json(rs, term["partition"])] += c;
  }
  return out;
}

json word_to_json(const Word& w) { return w.str(); }

json transition_to_json(const RootSystem& rs, const TransitionMatrix& t) {
  json labels = json::array(), parts = json::array(), reps = json::array(), rows = json::array();
  for (const auto& lambda : t.order) {
    labels.push_back(rs.label(lambda));
    parts.push_back(partition_to_json(lambda));
  }
  for (const auto& w : t.reps) reps.push_back(word_to_json(w));
  for (const auto& row : t.entries) {
    json r = json::array();
    for (const auto& x : row) r.push_back(laurent_to_json(x));
    rows.push_back(r);
  }
  return {{"dims", t.dims.values()}, {"labels", labels}, {"partitions", parts}, {"representatives", reps},
          {"entries", rows}};
}

}  // namespace hallbase
