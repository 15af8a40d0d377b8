#pragma once

// Line and token helpers shared by the text-format parsers.

#include <string>
#include <string_view>
#include <vector>

namespace twolevel::detail {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;  // 1-based, in code points
};

inline int utf8_column(std::string_view line, std::size_t byte) {
  int col = 1;
  for (std::size_t i = 0; i < byte && i < line.size(); ++i) {
    if ((static_cast<unsigned char>(line[i]) & 0xC0) != 0x80) ++col;
  }
  return col;
}

/// Drops everything from `!` to end of line, ignoring `!` inside double quotes.
inline std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '!' && !quoted) return line.substr(0, i);
  }
  return line;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    out.push_back(l);
    start = end + 1;
  }
  return out;
}

/// Whitespace-separated tokens of one line, comments removed.
inline std::vector<Token> tokens(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::string_view body = strip_comment(line);
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (body[i] == ' ' || body[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < body.size() && body[i] != ' ' && body[i] != '\t') ++i;
    if (i > start) {
      out.push_back({std::string(body.substr(start, i - start)), line_no,
                     utf8_column(line, start)});
    }
  }
  return out;
}

}  // namespace twolevel::detail
