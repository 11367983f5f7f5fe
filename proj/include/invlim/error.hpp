#ifndef INVLIM_ERROR_HPP
#define INVLIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace invlim {

enum class Errc {
  NonPrimeModulus,
  ReducibleModulus,
  UnsupportedField,
  DivisionByZero,
  FieldMismatch,
  CharacteristicZero,
  ArityMismatch,
  IndexOutOfRange,
  SpecMismatch,
  IncomparableSpecs,
  NotAUnit,
  ConstantTermNonzero,
  NotAnAutomorphism,
  BasePointNotFixed,
  IncoherentFamily,
  NoRationalImagePoint,
  JacobianNotConstantUnit,
  DomainTooLarge,
  SyntaxError,
  UnknownVariable,
  CoefficientOutOfField,
};

const char* errc_name(Errc c);

/// True for errors that report a failed mathematical hypothesis (the input
/// was well-formed but the requested analysis does not apply to it), as
/// opposed to malformed input. The CLI maps the former to exit code 2 and
/// the latter to exit code 1.
bool is_hypothesis_failure(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(Errc code, std::string message, int line, int col)
      : std::runtime_error(std::move(message)), code_(code), line_(line), col_(col) {}

  Errc code() const { return code_; }
  int line() const { return line_; }  // 1-based; -1 when not a parse error
  int col() const { return col_; }

 private:
  Errc code_;
  int line_ = -1;
  int col_ = -1;
};

[[noreturn]] inline void fail(Errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace invlim

#endif
