#ifndef ORECURV_ERROR_HPP
#define ORECURV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orecurv {

enum class ErrorCode {
  AllZero,
  ZeroInput,
  NotPrime,
  NeedsPositiveCharacteristic,
  FieldMismatch,
  DivisionByZero,
  NotAUnit,
  NotCentral,
  NotIntegral,
  NotPrimitive,
  OrderZero,
  ZeroTrailing,
  DegenerateReduction,
  IndexOutOfRange,
  FieldTooSmall,
  PrimeTooLarge,
  PrecisionContract,
  ParseError,
  Internal
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace orecurv

#endif
