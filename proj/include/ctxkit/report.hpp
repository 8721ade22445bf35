#pragma once

#include <string>

#include "json.hpp"

#include "ctxkit/inequalities.hpp"

namespace ctxkit {

using json = nlohmann::ordered_json;

// 12 significant digits, with negative zero folded to "0". All numbers in
// JSON documents go through this so that repeated runs are byte-identical
// and golden files stay portable.
std::string format_number(double v);

// Common document skeleton: schema marker, tool version, command echo.
json make_document(const std::string& command);

json witness_json(const WitnessReport& report);

// Serialize with a trailing newline, 2-space indent.
std::string dump_document(const json& doc);

} // namespace ctxkit
