#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdh {

// Error classes surfaced to callers and, by name, on the command line.
enum class Errc {
  MalformedHeader,
  UnsupportedMaxval,
  TruncatedData,
  RegionTooLarge,
  PayloadTooLarge,
  TruncatedEnvelope,
  LengthNotByteAligned,
  CorruptMapStream,
  NotEmbeddable,
  InconsistentMap,
  InsufficientCapacity,
  OverlapViolation,
  AuxOrderingViolation,
  SecretExhausted,
  LayerCountMismatch,
  DimensionMismatch,
  InvalidArgument,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  Errc code_;
};

}  // namespace rdh
