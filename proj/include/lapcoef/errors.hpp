#pragma once

#include <stdexcept>
#include <string>

namespace lapcoef {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public Error {
 public:
  enum class Code { kVertexOutOfRange, kDuplicateEdge, kSelfLoop, kInvalidFamily };

  GraphError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was asked for outside the domain on which it is defined
// (e.g. a forest-only formula on a graph with a cycle).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Brute-force oracle asked to run beyond its supported size.
class ScaleError : public Error {
 public:
  using Error::Error;
};

// A value that must be integral or non-negative came out otherwise.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace lapcoef
