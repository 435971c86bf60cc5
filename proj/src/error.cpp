#include "rdh/error.hpp"

namespace rdh {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::UnsupportedMaxval: return "UnsupportedMaxval";
    case Errc::TruncatedData: return "TruncatedData";
    case Errc::RegionTooLarge: return "RegionTooLarge";
    case Errc::PayloadTooLarge: return "PayloadTooLarge";
    case Errc::TruncatedEnvelope: return "TruncatedEnvelope";
    case Errc::LengthNotByteAligned: return "LengthNotByteAligned";
    case Errc::CorruptMapStream: return "CorruptMapStream";
    case Errc::NotEmbeddable: return "NotEmbeddable";
    case Errc::InconsistentMap: return "InconsistentMap";
    case Errc::InsufficientCapacity: return "InsufficientCapacity";
    case Errc::OverlapViolation: return "OverlapViolation";
    case Errc::AuxOrderingViolation: return "AuxOrderingViolation";
    case Errc::SecretExhausted: return "SecretExhausted";
    case Errc::LayerCountMismatch: return "LayerCountMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace rdh
