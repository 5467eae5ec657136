#ifndef SIMDIM_ERRORS_HPP
#define SIMDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simdim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (family files, instance files). Carries "file:line:".
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its contract (disconnected input, size
// limits, invalid parameters). CLI exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DisconnectedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SizeLimitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A result failed its own re-verification; always a bug. CLI exit code 3.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace simdim

#endif
