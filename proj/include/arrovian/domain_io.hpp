#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arrovian/preferences.hpp"

namespace arrovian {

/// Parse result: the canonicalized domain plus non-fatal warnings
/// (duplicate profiles are deduplicated with a warning, not an error).
struct ParsedDomain {
    Domain domain;
    std::vector<std::string> warnings;
};

/// Domain file format:
///
///   # comment
///   alternatives: x y z
///   voters: 2
///   x>y>z z>y>x
///   ...
///
/// One profile per body line, rankings whitespace-separated; '#' starts a
/// comment. Errors carry 1-based line numbers.
ParsedDomain parse_domain(std::string_view text);

/// Canonical text form: header plus one line per profile in canonical
/// order. serialize(parse(serialize(d))) == serialize(d).
std::string serialize_domain(const Domain& d);

ParsedDomain load_domain_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace arrovian
