#pragma once

#include <stdexcept>
#include <string>

namespace gtp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape parameters out of range.
struct InvalidShape : Error {
  using Error::Error;
};

// Entry map does not cover the shape exactly, or holds a non-positive entry.
struct MalformedPattern : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// Input is well formed but not a member of the family the operation requires.
struct InvalidInput : Error {
  using Error::Error;
};

}  // namespace gtp
