#pragma once

#include <stdexcept>
#include <string>

namespace tricomi {

// Mirrors tricomi_status in the C API; values must stay in sync.
enum class ErrorCode {
  Domain = 1,
  SingularLocus = 2,
  NonConvergence = 3,
  ToleranceNotMet = 4,
  InvalidArgument = 5,
  Io = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace tricomi
