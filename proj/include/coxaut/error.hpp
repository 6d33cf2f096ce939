#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxaut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed diagram files, unknown generator names, bad word tokens.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition of an operation was violated by its arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured search/size limit was hit before the computation finished.
// Callers must treat the result as unknown, never as pass or fail.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

struct Limits {
  std::size_t max_closure_states = 1'000'000;
  std::size_t max_ball_vertices = 1'000'000;
  std::size_t max_search_nodes = 20'000'000;
};

}  // namespace coxaut
