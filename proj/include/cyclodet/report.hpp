#pragma once

#include "cyclodet/catalog.hpp"

#include "json.hpp"

#include <string>

namespace cyclodet {

using Json = nlohmann::ordered_json;

// Length-8 array of "num/den" strings, coordinates on the power basis
// 1, zeta, ..., zeta^7.
Json field_json(const Cyclotomic& x);
// Inverse of field_json; throws std::invalid_argument on a wrong shape or an
// unparsable coordinate.
Cyclotomic field_from_json(const Json& j);

// {"case": ..., "N": ..., "params": {...}, "lhs": [...], "rhs": [...],
//  "equal": ..., "elapsed_ms": ...}. Params keep their map order, so
// serialization is deterministic and parse + re-serialize is byte-identical.
Json report_json(const VerifyReport& r);
VerifyReport report_from_json(const Json& j);

// One report per line (JSON Lines).
std::string reports_jsonl(const std::vector<VerifyReport>& rs);

} // namespace cyclodet
