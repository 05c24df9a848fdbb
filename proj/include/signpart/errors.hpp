#pragma once

#include <stdexcept>
#include <string>

namespace signpart {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed partition text (bad token, stray characters).
struct ParseError : Error {
  using Error::Error;
};

// Syntactically valid part list that is not weakly decreasing / positive.
struct NotAPartition : Error {
  using Error::Error;
};

// A (row, col) pair outside the Young diagram.
struct CellOutOfDiagram : Error {
  using Error::Error;
};

// |lambda| != |mu| where equal sizes are required.
struct SizeMismatch : Error {
  using Error::Error;
};

// Exact integer arithmetic exceeded its representable range. The engine
// promotes to arbitrary precision instead of wrapping, so this is reserved
// for contexts where promotion is impossible.
struct Overflow : Error {
  using Error::Error;
};

// Requested n exceeds the configured capacity for exhaustive work.
struct CapacityExceeded : Error {
  using Error::Error;
};

// A cross-check that must always hold by theory failed. Never expected.
struct InconsistencyError : Error {
  using Error::Error;
};

// An operation's stated preconditions do not hold for the given input.
struct PreconditionViolated : Error {
  using Error::Error;
};

// A constructed witness carried a claimed value that MN evaluation refuted.
// Never expected.
struct ClaimMismatch : Error {
  using Error::Error;
};

// The exhaustive witness search ran out of candidates. Never expected
// within the constructor's hypotheses.
struct SearchExhausted : Error {
  using Error::Error;
};

}  // namespace signpart
