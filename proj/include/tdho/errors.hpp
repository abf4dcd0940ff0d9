#pragma once

#include <stdexcept>
#include <string>

namespace tdho {

enum class ErrorCode {
  invalid_argument,
  domain_error,
  range_error,
  degenerate_solution,
  integration_failure,
  support_error,
  consistency_error,
  stability_error,
  input_error,
  parse_error,
  io_error,
};

// All library failures are reported through this one exception type so the
// C API can translate them into status codes without losing the message.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace tdho
