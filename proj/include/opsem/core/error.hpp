#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opsem {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid value for the operation: unknown label, out-of-range state,
// ill-scoped term, alphabet mismatch, unbound constant, ...
class DomainError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t col)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}

  // "path: line:col: msg", keeping the location fields
  static ParseError in_file(const std::string& path, const ParseError& e) {
    return ParseError(path + ": " + e.what(), e.line, e.col, 0);
  }

  std::size_t line;
  std::size_t col;

private:
  ParseError(const std::string& full, std::size_t line, std::size_t col, int)
      : Error(full), line(line), col(col) {}
};

// A resource bound was hit (state budget, subset guard, fuel). `reached`
// carries how far the computation got.
class BoundError : public Error {
public:
  BoundError(const std::string& msg, std::size_t reached)
      : Error(msg), reached(reached) {}
  std::size_t reached;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

}  // namespace opsem
