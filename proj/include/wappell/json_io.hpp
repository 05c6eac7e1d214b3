#pragma once

#include "json.hpp"  // vendored nlohmann/json single header

#include "wappell/partition.hpp"
#include "wappell/plancherel.hpp"
#include "wappell/polynomial.hpp"
#include "wappell/symfunc.hpp"
#include "wappell/verify.hpp"

namespace wappell {

using Json = nlohmann::ordered_json;

// Coefficients low degree to high, each as an exact "p/q" (or "p") string.
Json poly_to_json(const Poly& p);

// Parts as a JSON array of integers; the empty partition is [].
Json partition_to_json(const Partition& lambda);

// Power-sum expansion as a sorted list of {"partition", "coefficient"} records.
Json psym_to_json(const PSym& f);

Json suite_result_to_json(const SuiteResult& result);

Json plancherel_report_to_json(const PlancherelReport& report);

}  // namespace wappell
