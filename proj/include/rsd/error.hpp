#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsd {

enum class Errc {
  // dataset
  UnreadableFile,
  MissingColumn,
  EmptyTable,
  TooFewDistinctValues,
  NotBinaryControl,
  EmptyClass,
  ConstantTarget,
  InvalidSpec,
  // scores / ccs / estimators
  EmptySubgroup,
  NotAProbabilityVector,
  WeightOutOfRange,
  OutOfBounds,
  ZeroPoint,
  OutOfRange,
  EmptyRange,
  UnbalancedPopulation,
  // search / oracle
  AlphaOutOfRange,
  InvalidConfig,
  TooLarge,
  LanguageTooLarge,
};

std::string_view to_string(Errc code) noexcept;

/// Raised by every module. what() reads "<module>: <Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string_view module, std::string_view detail);

  Errc code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  Errc code_;
  std::string module_;
};

}  // namespace rsd
