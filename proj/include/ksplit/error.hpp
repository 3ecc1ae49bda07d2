#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ksplit {

enum class Errc {
  CompositeCharacteristic,
  ElementOutOfField,
  ZeroInverse,
  EndpointOutOfRange,
  LoopEdge,
  NotALaxSplit,
  TargetTooLarge,
  ParseError,
  InvariantViolation,
  GrammarError,
  ParameterError,
  PatternTooLarge,
  InstanceTooLarge,
  TooLarge,
  SizeGuard,
  PipelineUnderflow,
  ColoringIncomplete,
  DegenerateHost,
  UnsupportedFamily,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

// Single exception type for the library; the kind carries the failure class.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ksplit
