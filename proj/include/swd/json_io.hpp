#pragma once

#include <optional>

#include <gmpxx.h>
#include <json.hpp>

#include "swd/blocks.hpp"
#include "swd/category_o.hpp"
#include "swd/partition.hpp"
#include "swd/report.hpp"
#include "swd/symfunc.hpp"
#include "swd/tower.hpp"

namespace swd {

// JSON encodings used by the CLI. Partitions are arrays of parts; big
// integers are numbers when they fit in 64 bits and decimal strings otherwise.

nlohmann::json to_json(const mpz_class& value);
nlohmann::json to_json(const Partition& lambda);
Partition partition_from_json(const nlohmann::json& j);

/// {"terms": [{"partition", "coeff"}], "max_degree", "max_length"}.
nlohmann::json to_json(const SchurVector& v);
/// {"basis", "nu", "rank", "terms": [{"partition", "coeff"}]}.
nlohmann::json to_json(const KVector& v);
/// {"kind": "trivial"|"chain", "members"}.
nlohmann::json to_json(const BlockClass& c);
/// {"kind": "simple"|"verma", "partition"} or {"kind": "zero"}.
nlohmann::json to_json(const std::optional<OLabel>& label);
/// {"check_name", "parameters", "pass", "checked", "witnesses"}.
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const TowerVector& tower);

} // namespace swd
