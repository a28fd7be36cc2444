#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

// Exit codes used by the command-line front end map onto these categories.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A structural invariant (orthonormality, kind, trace preservation...) failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncg
