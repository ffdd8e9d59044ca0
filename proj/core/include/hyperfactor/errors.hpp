#pragma once

#include <stdexcept>
#include <string>

namespace hyperfactor {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input is well-formed but violates a semantic precondition
/// (not simple, not connected, not thin).
class RejectedInput : public Error {
 public:
  using Error::Error;
};

class NotSimple : public RejectedInput {
 public:
  using RejectedInput::RejectedInput;
};

class NotConnected : public RejectedInput {
 public:
  using RejectedInput::RejectedInput;
};

class NotThin : public RejectedInput {
 public:
  using RejectedInput::RejectedInput;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A post-condition that the theory guarantees did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperfactor
