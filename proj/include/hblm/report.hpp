#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hblm/enumerate.hpp"
#include "hblm/verify.hpp"

namespace hblm {

inline constexpr const char* kVersion = "0.1.0";

/// Report schema:
///   {"check", "ring": {p,n,f,eps,e,u}, "status", "counts": {N,DP,K,R},
///    "witnesses": [...], "notes": [...], "meta": {"wall_ms", "version"}}
/// Keys are sorted (nlohmann::json objects are ordered maps), so equal
/// reports serialize to equal bytes.
nlohmann::json ring_to_json(const RingSpec& spec);
RingSpec ring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& rep, bool with_wall_time = true);
/// Throws ParseError on schema violations.
VerificationReport report_from_json(const nlohmann::json& j);

/// A classification laid out in the report schema under the check name
/// "classify", plus a "types" object with the per-type counts.
VerificationReport classification_report(const RingSpec& spec, const Classification& cl, std::int64_t wall_ms);
nlohmann::json classification_to_json(const RingSpec& spec, const Classification& cl, std::int64_t wall_ms,
                                       bool with_wall_time = true);

/// One JSON document holding an array of reports under "reports".
std::string reports_json(const std::vector<VerificationReport>& reports, bool with_wall_time = true);
std::string reports_text(const std::vector<VerificationReport>& reports, bool with_wall_time = true);
/// Columns check,ring,status,N,DP,K,R,witnesses.
std::string reports_csv(const std::vector<VerificationReport>& reports);

struct AtlasRow {
    RingSpec ring;
    Counts counts;
    bool dp_eq_k = false;
};
std::string atlas_csv_header();
std::string atlas_csv_row(const AtlasRow& row);

}  // namespace hblm
