/*
  hj-ader: error taxonomy shared by the core library and the C API.

  License: Apache-2.0
*/
#ifndef HJADER_ERRORS_HPP
#define HJADER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hjader {

enum class ErrorCode {
  invalid_argument,
  unsupported_order,
  unknown_case,
  assembly_failure,
  oracle_failure,
  predictor_blowup,
  step_failure,
  io_failure,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::unsupported_order: return "unsupported-order";
    case ErrorCode::unknown_case: return "unknown-case";
    case ErrorCode::assembly_failure: return "assembly-failure";
    case ErrorCode::oracle_failure: return "oracle-failure";
    case ErrorCode::predictor_blowup: return "predictor-blowup";
    case ErrorCode::step_failure: return "step-failure";
    case ErrorCode::io_failure: return "io-failure";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

}  // namespace hjader

#endif
