#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gograph {

// Malformed edge-list or order-file input. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// Exhaustive oracles refuse inputs above their factorial caps.
class SizeGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CyclicGraphError : public std::runtime_error {
public:
  CyclicGraphError(std::size_t vertex, const std::string& what)
      : std::runtime_error(what), vertex_(vertex) {}

  // A vertex lying on some directed cycle (dense id).
  std::size_t vertex() const noexcept { return vertex_; }

private:
  std::size_t vertex_;
};

class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace gograph
