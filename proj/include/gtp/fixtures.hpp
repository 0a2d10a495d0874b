#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gtp/pattern.hpp"

namespace gtp {

// Golden text files from data/, compiled into the library.
// Throws std::out_of_range for unknown names.
std::string_view fixture(std::string_view name);
Pattern fixture_pattern(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace gtp
