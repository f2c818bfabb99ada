#pragma once

#include <stdexcept>

namespace gp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input files.
struct ParseError : Error {
  using Error::Error;
};

// Structural invariant violations in loaded data.
struct ValidationError : Error {
  using Error::Error;
};

// An operation was called outside its stated precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// Meet of two equal paths (defined only for distinct points).
struct UndefinedMeetError : Error {
  using Error::Error;
};

// A finite-explicit oracle was queried with a vertex it does not name.
struct UnknownVertexError : Error {
  using Error::Error;
};

// Normal forms over different graph instances were combined.
struct MixedGraphError : Error {
  using Error::Error;
};

// The oracle's exploration bound cannot hold the words involved.
struct BoundTooSmallError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

// Invariant breaches that indicate a bug, not bad input. Never caught
// internally; surfaced to the caller.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace gp
