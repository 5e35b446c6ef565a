#pragma once
#include <optional>
#include <string>

#include "ro2ss/degree.hpp"
#include "ro2ss/maps.hpp"

namespace ro2ss {

inline constexpr int kSchemaVersion = 1;

/// Stable text form: one line per block, then a summary line.
std::string report_text(const Report& rep);

/// {"schema_version": .., "check": .., "blocks": [{"block", "status", "witness"?}]}
std::string report_json(const Report& rep);

/// Parse "m", "pa", "m+pa", "m-pa" ("0-1a", "-a", "2", ...).
std::optional<Degree> parse_shift(const std::string& s);

} // namespace ro2ss
