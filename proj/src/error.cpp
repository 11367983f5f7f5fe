#include "invlim/error.hpp"

namespace invlim {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::IncomparableSpecs: return "IncomparableSpecs";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::ConstantTermNonzero: return "ConstantTermNonzero";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::BasePointNotFixed: return "BasePointNotFixed";
    case Errc::IncoherentFamily: return "IncoherentFamily";
    case Errc::NoRationalImagePoint: return "NoRationalImagePoint";
    case Errc::JacobianNotConstantUnit: return "JacobianNotConstantUnit";
    case Errc::CharacteristicZero: return "CharacteristicZero";
    case Errc::DomainTooLarge: return "DomainTooLarge";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::CoefficientOutOfField: return "CoefficientOutOfField";
  }
  return "UnknownError";
}

bool is_hypothesis_failure(Errc c) {
  switch (c) {
    // The input parsed and made sense, but a mathematical hypothesis the
    // operation needs does not hold.
    case Errc::NotAUnit:
    case Errc::NotAnAutomorphism:
    case Errc::BasePointNotFixed:
    case Errc::IncoherentFamily:
    case Errc::NoRationalImagePoint:
    case Errc::JacobianNotConstantUnit:
      return true;
    default:
      return false;
  }
}

}  // namespace invlim
