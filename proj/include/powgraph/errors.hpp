#ifndef POWGRAPH_ERRORS_HPP
#define POWGRAPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powgraph {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values (n = 0, non-prime p, index out of range, ...).
struct InvalidParameterError : Error {
  using Error::Error;
};

// A construction would exceed a configured size cap.
struct CapacityError : Error {
  using Error::Error;
};

// Group-expression syntax errors; `offset` is the byte position in the input.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what + " (at byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
};

}  // namespace powgraph

#endif  // POWGRAPH_ERRORS_HPP
