#pragma once

#include <stdexcept>
#include <string>

namespace gpl {

enum class Errc {
  DivisionByZero,
  DescriptorMismatch,
  InfiniteField,
  ZeroDenominator,
  ConstantFunction,
  CapExceeded,
  UnsupportedGenus,
  NoGeneratorFound,
  NonFreeOrbit,
  PoleMismatch,
  BasePointFound,
  DegreeMismatch,
  InconsistentRamification,
  BadCharacteristic,
  HypothesisViolated,
  DegenerateQ,
  FitFailed,
  PoleVerificationFailed,
  ConfigError,
  IoError,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace gpl
