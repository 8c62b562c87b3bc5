#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "hallbase/basis.hpp"
#include "hallbase/laurent.hpp"
#include "hallbase/poly.hpp"
#include "hallbase/roots.hpp"
#include "hallbase/words.hpp"

namespace hallbase {

using json = nlohmann::json;

/// A JSON number when the value fits in 64 bits, otherwise a decimal string.
json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const json& j);

/// {"2":1,"5":2}: 1-based canonical root index → multiplicity.
json partition_to_json(const KostantPartition& p);
/// Throws InputError on unknown roots, non-integers or negative multiplicities.
KostantPartition partition_from_json(const RootSystem& rs, const json& j);
KostantPartition parse_partition(const RootSystem& rs, const std::string& text);

json intpoly_to_json(const IntPoly& p);
IntPoly intpoly_from_json(const json& j);
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

/// [{"partition": {...}, "label": "...", "poly": {"coeffs": [...]}}, ...]
json polymap_to_json(const RootSystem& rs, const std::map<KostantPartition, IntPoly>& m);
/// [{"partition": {...}, "label": "...", "laurent": {"lo": k, "coeffs": [...]}}, ...]
json uplus_to_json(const RootSystem& rs, const UPlusElement& u);
UPlusElement uplus_from_json(const RootSystem& rs, const json& j);

json word_to_json(const Word& w);
json transition_to_json(const RootSystem& rs, const TransitionMatrix& t);

}  // namespace hallbase
