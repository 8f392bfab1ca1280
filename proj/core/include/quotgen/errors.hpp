#pragma once

#include <stdexcept>
#include <string>

namespace quotgen {

// Failure modes of the algebra kernel and the series pipelines. A single
// exception class carrying a code keeps the CLI's exit-code mapping flat
// and lets tests assert on the exact failure kind.
enum class Errc {
  DivisionByZero,
  NotInvertible,
  VariableMismatch,
  ExpOfUnit,
  ExponentOutOfRange,
  NotGaloisInvariant,
  NoSolution,
  PoleAtOne,
  PoleAtY1,
  InvalidArgument,
  UnsupportedGeometry,
  FractionalPowerResidue,
  OddHalfPower,
  PadeMismatch,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace quotgen
