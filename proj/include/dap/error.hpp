#pragma once

#include <stdexcept>
#include <string>

namespace dap {

/// Engine error codes. Every precondition violation maps to one of these so
/// callers (and the script evaluator) can report failures uniformly.
enum class Errc {
  ModelMismatch,
  NonPrimeModulus,
  ZeroInverse,
  BadNatural,
  BadLiteral,
  CoincidentPoints,
  ZeroDirection,
  OffLine,
  AuxOnLine,
  ZeroPoint,
  ZeroDenominator,
  CoincidentBC,
  MalformedConfig,
  ScopeTooLarge,
  GeneratorExhausted,
  DegenerateImage,
  PreconditionViolated,
  BadTrace,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dap
