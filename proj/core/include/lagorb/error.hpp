#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lagorb {

enum class ErrorCode {
  DimensionMismatch,
  Precondition,
  Range,
  Shape,
  Singular,
  NotSameOrbit,
  InvalidGraph,
  InvalidElement,
  NotInL00,
  NoDeeperStratum,
  NoRationalWitness,
  TooLarge,
  Schema,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const char* message) {
  if (!condition) throw Error(code, message);
}

}  // namespace lagorb
