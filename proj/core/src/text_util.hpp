#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mscodes/errors.hpp"

namespace mscodes::detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

inline std::uint64_t parse_u64(std::string_view token, std::string_view what) {
  token = trim(token);
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return value;
}

inline double parse_double(std::string_view token, std::string_view what) {
  token = trim(token);
  // std::from_chars for double is available in libstdc++ 11.
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return value;
}

/// Splits on `sep`; an all-whitespace input yields no tokens.
inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

/// Strips the given delimiters around a bracketed list, e.g. "{1,2}" -> "1,2".
inline std::string_view unwrap(std::string_view s, char open, char close, std::string_view what) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw ParseError(std::string(what) + " must be enclosed in '" + open + "' and '" + close +
                     "': '" + std::string(s) + "'");
  }
  return s.substr(1, s.size() - 2);
}

}  // namespace mscodes::detail
