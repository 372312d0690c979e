#pragma once

#include <stdexcept>
#include <string>

namespace pla {

// Failure classes map onto the CLI exit codes: parse errors (2),
// violated preconditions (3) and exceeded search caps (5). A check that
// merely reports "fail" is not an error; it is a result.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace pla
