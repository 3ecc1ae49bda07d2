#pragma once

// Line-oriented parsing shared by the graph, split and coloring formats.

#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ksplit/error.hpp"

namespace ksplit::detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-comment, non-blank line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(Errc::ParseError, "line " + std::to_string(number_) + ": " + message);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::uint64_t parse_number(const LineReader& reader, std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    reader.fail("expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

// Parses "key value key value ..." with exactly the given keys in order.
inline std::vector<std::uint64_t> parse_keyed(const LineReader& reader, const std::string& line,
                                              std::initializer_list<std::string_view> keys) {
  const auto tokens = split_tokens(line);
  if (tokens.size() != 2 * keys.size()) reader.fail("malformed size line '" + line + "'");
  std::vector<std::uint64_t> values;
  std::size_t i = 0;
  for (std::string_view key : keys) {
    if (tokens[2 * i] != key) reader.fail("expected key '" + std::string(key) + "'");
    values.push_back(parse_number(reader, tokens[2 * i + 1]));
    ++i;
  }
  return values;
}

inline void expect_header(LineReader& reader, std::string& line, std::string_view header) {
  if (!reader.next(line)) reader.fail("empty input");
  if (split_tokens(line) != std::vector<std::string_view>{header, "1"}) {
    reader.fail("expected header '" + std::string(header) + " 1'");
  }
}

inline void append_number(std::string& buffer, std::uint64_t value) {
  char tmp[24];
  auto [ptr, ec] = std::to_chars(tmp, tmp + sizeof tmp, value);
  buffer.append(tmp, ptr);
}

}  // namespace ksplit::detail
