#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbitquad {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched matrix/vector shapes.
struct DimensionError : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of an operation
// (alpha in {0,1} for certification, a outside (-1,1) for kites, ...).
struct DomainError : Error {
  using Error::Error;
};

// Malformed textual input. `line` is 1-based, 0 when not applicable.
struct ParseError : Error {
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(what), line(line) {}
  std::size_t line;
};

// Group closure grew past the configured cap.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what, std::size_t cap)
      : Error(what), cap(cap) {}
  std::size_t cap;
};

// Geometric predicate asked about a degenerate configuration.
struct DegenerateInput : Error {
  using Error::Error;
};

// A pencil determinant vanished at the witness point. Carries the offending
// triple so callers can name it.
struct CertificateFailure : Error {
  CertificateFailure(const std::string& what, std::array<int, 3> triple)
      : Error(what), triple(triple) {}
  std::array<int, 3> triple;
};

}  // namespace orbitquad
