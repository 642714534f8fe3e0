#pragma once

#include <stdexcept>
#include <string>

namespace dsg {

// Error classes map onto process exit codes at the CLI boundary:
// input -> 2, guard -> 3, internal -> 4.
enum class ErrorClass { input, guard, internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& msg)
      : std::runtime_error(msg), cls_(cls) {}
  ErrorClass cls() const noexcept { return cls_; }

 private:
  ErrorClass cls_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(ErrorClass::input, msg) {}
  ParseError(long line, const std::string& msg)
      : Error(ErrorClass::input, "line " + std::to_string(line) + ": " + msg) {}
};

struct EmptySuccessorSet : Error {
  explicit EmptySuccessorSet(int v)
      : Error(ErrorClass::input,
              "vertex " + std::to_string(v) + " has no outgoing edge") {}
};

struct DanglingVertexId : Error {
  explicit DanglingVertexId(long long v)
      : Error(ErrorClass::input,
              "vertex id " + std::to_string(v) + " out of range") {}
};

struct DuplicateEdge : Error {
  DuplicateEdge(int u, int v)
      : Error(ErrorClass::input, "duplicate edge " + std::to_string(u) + " -> " +
                                     std::to_string(v)) {}
};

struct LambdaOutOfRange : Error {
  explicit LambdaOutOfRange(const std::string& got)
      : Error(ErrorClass::input, "discount factor must lie in [0,1), got " + got) {}
};

struct LambdaBelowThreshold : Error {
  explicit LambdaBelowThreshold(const std::string& msg)
      : Error(ErrorClass::input, msg) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg)
      : Error(ErrorClass::input, msg) {}
};

struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& op)
      : Error(ErrorClass::input, op + ": zero polynomial not admitted") {}
};

struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& msg)
      : Error(ErrorClass::input, msg) {}
};

struct CountingConditionFails : Error {
  explicit CountingConditionFails(const std::string& msg)
      : Error(ErrorClass::input, msg) {}
};

struct TooManyProfiles : Error {
  explicit TooManyProfiles(const std::string& msg)
      : Error(ErrorClass::guard, msg) {}
};

struct SearchSpaceTooLarge : Error {
  explicit SearchSpaceTooLarge(const std::string& msg)
      : Error(ErrorClass::guard, msg) {}
};

// Violation of a property that must hold on every input; never expected to fire.
struct InternalError : Error {
  explicit InternalError(const std::string& msg)
      : Error(ErrorClass::internal, msg) {}
};

}  // namespace dsg
