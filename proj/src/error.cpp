#include "ksplit/error.hpp"

namespace ksplit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::CompositeCharacteristic: return "CompositeCharacteristic";
    case Errc::ElementOutOfField: return "ElementOutOfField";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::EndpointOutOfRange: return "EndpointOutOfRange";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::NotALaxSplit: return "NotALaxSplit";
    case Errc::TargetTooLarge: return "TargetTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::GrammarError: return "GrammarError";
    case Errc::ParameterError: return "ParameterError";
    case Errc::PatternTooLarge: return "PatternTooLarge";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SizeGuard: return "SizeGuard";
    case Errc::PipelineUnderflow: return "PipelineUnderflow";
    case Errc::ColoringIncomplete: return "ColoringIncomplete";
    case Errc::DegenerateHost: return "DegenerateHost";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ksplit
