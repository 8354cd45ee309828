#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "qrs/axioms.hpp"
#include "qrs/fock.hpp"
#include "qrs/solve.hpp"

namespace qrs {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "qrs/1";

// exact values: rationals as "p/q" strings, single surds as {p, q, r},
// general surd sums as {"terms": [...]}; numeric values as JSON numbers
Json exact_to_json(const SurdSum& v);
SurdSum exact_from_json(const Json& j);

Json system_to_json(const QuasiRootSystemData& data);
QuasiRootSystemData system_from_json(const Json& j);  // throws SchemaError

Json validation_report_to_json(const ValidationReport& report);

Json solution_to_json(const PolynomialSystem& sys, const SolutionRecord& rec);
// Returns the variable vector (and exact vector when present) for the system.
SolutionRecord solution_from_json(const PolynomialSystem& sys, const Json& j);

Json oracle_report_to_json(const OracleReport& report);

// canonical on-disk form: sorted keys, stable float formatting, atomic rename
void write_json_atomic(const std::string& path, const Json& j);
Json read_json(const std::string& path);  // throws SchemaError on parse failure

}  // namespace qrs
