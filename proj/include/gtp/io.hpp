#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gtp/pattern.hpp"

namespace gtp {

// Text block: header line, then one line per non-empty row from the top,
// entries space-separated, every line LF-terminated.
//
//   left 5 2
//   1 2
//   1 3
//   ...
std::string to_text(const Pattern& p);

// Parses exactly one block. Throws ParseError.
Pattern parse_text(std::string_view text);

// Blocks separated by blank lines; '#' comment lines are skipped.
std::vector<Pattern> parse_text_stream(std::string_view text);

nlohmann::json to_json(const Pattern& p);
Pattern pattern_from_json(const nlohmann::json& j);

}  // namespace gtp
