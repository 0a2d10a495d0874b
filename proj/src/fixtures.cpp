#include "gtp/fixtures.hpp"

#include <map>
#include <stdexcept>

#include "gtp/io.hpp"

namespace gtp {

namespace detail {
const std::map<std::string, std::string>& fixture_table();
}

std::string_view fixture(std::string_view name) {
  const auto& t = detail::fixture_table();
  auto it = t.find(std::string(name));
  if (it == t.end()) throw std::out_of_range("no fixture named " + std::string(name));
  return it->second;
}

Pattern fixture_pattern(std::string_view name) { return parse_text(fixture(name)); }

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : detail::fixture_table()) names.push_back(k);
  return names;
}

}  // namespace gtp
