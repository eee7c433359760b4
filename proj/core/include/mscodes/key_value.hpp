#pragma once

#include <map>
#include <string>
#include <string_view>

namespace mscodes {

/// Parses whitespace-separated `key=value` tokens (newlines count as
/// whitespace; `#` starts a comment running to end of line). Throws
/// ParseError on a token without `=` or a repeated key.
std::map<std::string, std::string> parse_key_values(std::string_view text);

}  // namespace mscodes
