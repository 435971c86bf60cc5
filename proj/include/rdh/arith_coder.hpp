#pragma once

#include <cstddef>
#include <cstdint>

#include "rdh/bit_io.hpp"

namespace rdh {

/// Adaptive binary frequency model: Laplace counts starting at 1/1, both
/// halved (rounding up) once their sum reaches 2^16.
class AdaptiveBitModel {
 public:
  static constexpr std::uint32_t kRescaleAt = 1u << 16;

  std::uint32_t zeros() const noexcept { return c0_; }
  std::uint32_t total() const noexcept { return c0_ + c1_; }
  void update(bool bit) noexcept;

 private:
  std::uint32_t c0_ = 1;
  std::uint32_t c1_ = 1;
};

/// Binary arithmetic encoder with 32-bit low/high registers and pending-bit
/// underflow handling.
class ArithmeticEncoder {
 public:
  void encode(bool bit, AdaptiveBitModel& model);
  /// Flushes the final interval and returns the body. The encoder is spent afterwards.
  BitStream finish();

 private:
  void emit(bool bit);

  std::uint64_t low_ = 0;
  std::uint64_t high_ = 0xFFFFFFFFu;
  std::size_t pending_ = 0;
  BitStream out_;
};

/// Mirror of ArithmeticEncoder. Bits past the end of the body read as zero.
class ArithmeticDecoder {
 public:
  explicit ArithmeticDecoder(const BitStream& body);

  bool decode(AdaptiveBitModel& model);
  /// Total bits pulled from the body so far, including zero padding past its end.
  std::size_t bits_consumed() const noexcept { return consumed_; }

 private:
  bool next_bit();

  const BitStream& body_;
  std::uint64_t low_ = 0;
  std::uint64_t high_ = 0xFFFFFFFFu;
  std::uint64_t value_ = 0;
  std::size_t consumed_ = 0;
};

/// A well-formed body of n bits is always drained in exactly n + kDecoderLookahead reads.
inline constexpr std::size_t kDecoderLookahead = 30;

}  // namespace rdh
