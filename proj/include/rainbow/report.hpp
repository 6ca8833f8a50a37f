#pragma once

#include <json.hpp>

#include "rainbow/audit.hpp"
#include "rainbow/campaign.hpp"
#include "rainbow/colordeg.hpp"

namespace rainbow {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "rainbow-report/1";
inline constexpr const char* kAuditSchema = "rainbow-audit/1";

Json params_json(const TheoremParams& params);
Json generator_json(const GenSpec& spec);
Json witness_json(const RainbowWitness& w);

// Field order is fixed. timing_ms is written as 0 unless `with_timing`, which
// keeps repeated runs byte-identical.
Json report_json(const TheoremReport& report, bool with_timing = false);
Json report_json(const MiningReport& report, bool with_timing = false);

Json audit_json(const PathAuditReport& report);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace rainbow
