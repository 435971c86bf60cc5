#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rdh {

/// Ordered bit sequence with a read cursor.
///
/// Appends never move the cursor; reads advance it and throw
/// Errc::SecretExhausted when the stream runs dry.
class BitStream {
 public:
  BitStream() = default;
  explicit BitStream(std::vector<std::uint8_t> bits);
  BitStream(std::initializer_list<int> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::size_t cursor() const noexcept { return cursor_; }
  std::size_t remaining() const noexcept { return bits_.size() - cursor_; }

  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void append(const BitStream& other);
  /// Appends the low `width` bits of `value`, most significant first.
  void push_uint(std::uint64_t value, unsigned width);
  void reserve(std::size_t n) { bits_.reserve(n); }

  bool read();
  /// Reads `n` bits into a fresh stream.
  BitStream read_bits(std::size_t n);
  std::uint64_t read_uint(unsigned width);
  void rewind() noexcept { cursor_ = 0; }

  /// Copy of bits [first, first + count).
  BitStream slice(std::size_t first, std::size_t count) const;
  /// Big-endian integer from bits [first, first + width).
  std::uint64_t uint_at(std::size_t first, unsigned width) const;

  /// Packs bits MSB-first, zero-padding the final byte.
  std::vector<std::uint8_t> to_bytes() const;
  static BitStream from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count);

  friend bool operator==(const BitStream& a, const BitStream& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t cursor_ = 0;
};

/// Payload envelope: 32-bit big-endian bit count, then the payload bytes MSB-first.
inline constexpr std::size_t kEnvelopeHeaderBits = 32;

BitStream encode_envelope(std::span<const std::uint8_t> payload);
std::vector<std::uint8_t> decode_envelope(const BitStream& bits);

}  // namespace rdh
