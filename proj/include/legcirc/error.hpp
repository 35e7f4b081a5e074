#pragma once

#include <stdexcept>
#include <string>

namespace legcirc {

enum class ErrorCode {
  InvalidInput,
  ZeroVector,
  NotLagrangian,
  NotTransverse,
  NotSymplectic,
  InvalidPolygon,
  Degenerate,
  NotOrientedTransverse,
  Parse,
  Io,
  Unrepresentable,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace legcirc
