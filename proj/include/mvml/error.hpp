#pragma once

#include <stdexcept>
#include <string>

namespace mvml {

enum class Errc {
  NotALattice,
  NotAMonoid,
  ResiduationFails,
  BadParam,
  SyntaxError,
  UnknownConstant,
  UnknownVariable,
  DiamondUnsupported,
  NotMVChain,
  NotFound,
  NotBooleanFrame,
  NoUniqueCoatom,
  NonModalExpected,
  BudgetExceeded,
  PremiseFails,
  PropertyFails,
  PrerequisiteFails,
  InvalidStep,
  UnknownSchema,
  ConstantsDisabled,
  FileError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace mvml
