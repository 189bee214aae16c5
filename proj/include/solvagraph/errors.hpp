#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solvagraph {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IncompatibleElements : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotASubgroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotNormal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ElementNotInGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedFormat : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Value out of the grammar's allowed range (1-based points, residues mod p).
struct OutOfRange : ParseError {
  using ParseError::ParseError;
};

}  // namespace solvagraph
