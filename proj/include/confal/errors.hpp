#pragma once

#include <stdexcept>
#include <string>

namespace confal {

/// Iterating a derivation did not reach zero within the configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or saturation exceeded its configured cap.
class ResourceBound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotUnital : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClosureBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotNilpotent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the DSL front end. Carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column)
  {
  }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

} // namespace confal
