#include "quotgen/errors.hpp"

namespace quotgen {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::ExpOfUnit: return "ExpOfUnit";
    case Errc::ExponentOutOfRange: return "ExponentOutOfRange";
    case Errc::NotGaloisInvariant: return "NotGaloisInvariant";
    case Errc::NoSolution: return "NoSolution";
    case Errc::PoleAtOne: return "PoleAtOne";
    case Errc::PoleAtY1: return "PoleAtY1";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::UnsupportedGeometry: return "UnsupportedGeometry";
    case Errc::FractionalPowerResidue: return "FractionalPowerResidue";
    case Errc::OddHalfPower: return "OddHalfPower";
    case Errc::PadeMismatch: return "PadeMismatch";
  }
  return "UnknownError";
}

}  // namespace quotgen
