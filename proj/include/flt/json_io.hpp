#pragma once

// JSON encodings of the domain types. Integers that may exceed 64 bits are
// written as decimal strings.

#include "json.hpp"

#include "flt/audit.hpp"
#include "flt/conjecture.hpp"
#include "flt/flt_scan.hpp"
#include "flt/lemma.hpp"
#include "flt/pythagoras.hpp"

namespace flt {

using nlohmann::json;

json to_json(const Integer& v);
Integer integer_from_json(const json& j);

json to_json(const EvalPoint& p);
json to_json(const PythTriple& t);
json to_json(const Representation& r);
json to_json(const FermatSolution& s);
json to_json(const ConjectureInstance& inst);
json to_json(const PerReading& r);
json to_json(const ConditionReport& c);
json to_json(const SearchSpace& s);
json to_json(const ImplicationCounterexample& c);
json to_json(const IdentityRecord& r);
json to_json(const CrossCheckSummary& s);
json to_json(const ParamAuditOptions& o);
json to_json(const Evidence& e);
json to_json(const AuditConfig& c);

// One line of the search result log.
json result_log_entry(const Solution& s);

// Parses an audit configuration; absent keys keep their defaults. Throws
// std::invalid_argument on unknown keys or wrongly typed values.
AuditConfig audit_config_from_json(const json& j);

// Search space from {"case", "bounds": {var: [lo, hi]}, "shards"}.
SearchSpace search_space_from_json(const json& j);

}  // namespace flt
