#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "silver/errors.hpp"

namespace silver {

// Splits on runs of spaces/tabs; never yields empty fields.
inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

// Splits on single tabs, keeping empty fields.
inline std::vector<std::string> split_tab(std::string_view line) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == '\t') {
      out.emplace_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

// Strict non-negative decimal parse; anything else is a ParseError.
inline int parse_index(std::string_view text, size_t line_no = 0) {
  int value = 0;
  if (text.empty())
    throw ParseError("expected a non-negative integer, got an empty field", line_no);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0)
    throw ParseError("expected a non-negative integer, got '" + std::string(text) + "'",
                     line_no);
  return value;
}

}  // namespace silver
