#ifndef WGSHIFT_ERRORS_HPP
#define WGSHIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wgs {

enum class ErrorCode {
  NotPrime,
  ZeroInverse,
  SpecMismatch,
  AddressOutOfRange,
  SizeMismatch,
  StateSpaceTooLarge,
  HypothesisNotMet,
  NotPeriodic,
  UnknownEntry,
  ParseError,
  InternalInconsistency,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

} // namespace wgs

#endif
