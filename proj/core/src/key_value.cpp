#include "mscodes/key_value.hpp"

#include <sstream>

#include "mscodes/errors.hpp"

namespace mscodes {

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ParseError("expected key=value, got '" + token + "'", line_no);
      }
      auto key = token.substr(0, eq);
      if (!out.emplace(key, token.substr(eq + 1)).second) {
        throw ParseError("duplicate key '" + key + "'", line_no);
      }
    }
  }
  return out;
}

}  // namespace mscodes
