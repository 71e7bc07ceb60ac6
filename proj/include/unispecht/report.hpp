#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "unispecht/charpoly.hpp"

namespace unispecht {

// JSON schema (format version 1), one object per n:
//   {version, n, partition_count, unisingular_count,
//    verdicts: [{lambda, dimension, unisingular, offending}]}
// lambda and offending entries are arrays of parts; dimension is a JSON
// integer when it fits 64 bits and a decimal string otherwise.
nlohmann::json to_json(const ScanReport& report);
nlohmann::json to_json(const std::vector<ScanReport>& reports); // array
ScanReport scan_report_from_json(const nlohmann::json& j);
std::vector<ScanReport> scan_reports_from_json(const nlohmann::json& j);

// Summary table: one row per n (P(n), unisingular count) with the
// exceptional shapes and their offending classes on continuation rows.
std::string to_markdown(const std::vector<ScanReport>& reports);

// One row per lambda: n,lambda,dimension,unisingular,offending.
std::string to_csv(const std::vector<ScanReport>& reports);

nlohmann::json verdict_to_json(const UnisingularVerdict& v);
UnisingularVerdict verdict_from_json(const nlohmann::json& j);

// "2^2,1^3" or "4,3,1" -> Partition; malformed input names the bad token.
Partition parse_partition(const std::string& text);

} // namespace unispecht
