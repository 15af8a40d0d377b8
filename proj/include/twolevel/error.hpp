#pragma once

#include <stdexcept>
#include <string>

namespace twolevel {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string source, int line, int column, const std::string& message)
      : Error(format(source, line, column, message)),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& source, int line, int column,
                            const std::string& message) {
    std::string out = source.empty() ? "<input>" : source;
    if (line > 0) {
      out += ":" + std::to_string(line);
      if (column > 0) out += ":" + std::to_string(column);
    }
    return out + ": " + message;
  }

  std::string source_;
  int line_;
  int column_;
};

/// Well-formed input that references something undeclared or inconsistent.
class ContentError : public Error {
 public:
  using Error::Error;
};

}  // namespace twolevel
