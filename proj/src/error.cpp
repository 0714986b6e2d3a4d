#include "rsd/error.hpp"

namespace rsd {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::UnreadableFile: return "UnreadableFile";
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::EmptyTable: return "EmptyTable";
    case Errc::TooFewDistinctValues: return "TooFewDistinctValues";
    case Errc::NotBinaryControl: return "NotBinaryControl";
    case Errc::EmptyClass: return "EmptyClass";
    case Errc::ConstantTarget: return "ConstantTarget";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::EmptySubgroup: return "EmptySubgroup";
    case Errc::NotAProbabilityVector: return "NotAProbabilityVector";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::OutOfBounds: return "OutOfBounds";
    case Errc::ZeroPoint: return "ZeroPoint";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::EmptyRange: return "EmptyRange";
    case Errc::UnbalancedPopulation: return "UnbalancedPopulation";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::TooLarge: return "TooLarge";
    case Errc::LanguageTooLarge: return "LanguageTooLarge";
  }
  return "Unknown";
}

namespace {

std::string format_message(Errc code, std::string_view module, std::string_view detail) {
  std::string msg;
  msg.reserve(module.size() + detail.size() + 32);
  msg.append(module).append(": ").append(to_string(code));
  if (!detail.empty()) msg.append(": ").append(detail);
  return msg;
}

}  // namespace

Error::Error(Errc code, std::string_view module, std::string_view detail)
    : std::runtime_error(format_message(code, module, detail)), code_(code), module_(module) {}

}  // namespace rsd
