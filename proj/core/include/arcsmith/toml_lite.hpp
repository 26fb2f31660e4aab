#pragma once

#include <string_view>

#include <json.hpp>

namespace arcsmith::toml_lite {

// Parses a TOML subset into the same JSON document the .json input path
// consumes: tables, arrays of tables, dotted headers, inline tables, arrays
// (multiline allowed), basic strings, integers, floats, booleans, comments.
// Datetimes, multiline strings and other TOML features are rejected with a
// line-numbered ParseError.
nlohmann::json parse(std::string_view text);

} // namespace arcsmith::toml_lite
