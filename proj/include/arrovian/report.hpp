#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "arrovian/classes.hpp"
#include "arrovian/decisive.hpp"
#include "arrovian/search.hpp"

namespace arrovian {

inline constexpr std::string_view kToolName = "arrovian";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

using Json = nlohmann::ordered_json;

/// FNV-1a 64 of the raw bytes, rendered "fnv1a64:<16 hex digits>".
std::string digest(std::string_view bytes);

/// Report envelope with the documented key order: schema, tool, command,
/// input, result (added by the caller), stats (unless quiet).
Json report_envelope(const std::string& command, const Json& input);

Json json_coalition(const Coalition& g);
Json json_certificate(const ClassCertificate& cert, const AlternativeSet& alts);
Json json_verdict(const Verdict& v, const Domain& d, bool with_tables);
Json json_audit(const AuditReport& report);
Json json_probe(const ProbeReport& report);
Json json_map(const ChromaticMap& map, bool with_table);

/// Worker count: ARROVIAN_THREADS, where 0 or unset means automatic.
int resolve_threads();

} // namespace arrovian
