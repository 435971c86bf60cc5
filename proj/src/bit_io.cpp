#include "rdh/bit_io.hpp"

#include <string>

#include "rdh/error.hpp"

namespace rdh {

BitStream::BitStream(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

BitStream::BitStream(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) bits_.push_back(b ? 1 : 0);
}

void BitStream::append(const BitStream& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

void BitStream::push_uint(std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) push_back(((value >> i) & 1u) != 0);
}

bool BitStream::read() {
  if (cursor_ >= bits_.size()) throw Error(Errc::SecretExhausted, "bit stream exhausted");
  return bits_[cursor_++] != 0;
}

BitStream BitStream::read_bits(std::size_t n) {
  if (n > remaining()) {
    throw Error(Errc::SecretExhausted,
                "requested " + std::to_string(n) + " bits, " + std::to_string(remaining()) + " left");
  }
  BitStream out(std::vector<std::uint8_t>(bits_.begin() + cursor_, bits_.begin() + cursor_ + n));
  cursor_ += n;
  return out;
}

std::uint64_t BitStream::read_uint(unsigned width) {
  if (width > remaining()) throw Error(Errc::SecretExhausted, "bit stream exhausted");
  std::uint64_t v = uint_at(cursor_, width);
  cursor_ += width;
  return v;
}

BitStream BitStream::slice(std::size_t first, std::size_t count) const {
  return BitStream(std::vector<std::uint8_t>(bits_.begin() + first, bits_.begin() + first + count));
}

std::uint64_t BitStream::uint_at(std::size_t first, unsigned width) const {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | bits_[first + i];
  return v;
}

std::vector<std::uint8_t> BitStream::to_bytes() const {
  std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

BitStream BitStream::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
  std::vector<std::uint8_t> bits(bit_count);
  for (std::size_t i = 0; i < bit_count; ++i) bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1u;
  return BitStream(std::move(bits));
}

BitStream encode_envelope(std::span<const std::uint8_t> payload) {
  if (payload.size() >= (std::size_t{1} << 29)) {
    throw Error(Errc::PayloadTooLarge, std::to_string(payload.size()) + " bytes");
  }
  BitStream out;
  out.reserve(kEnvelopeHeaderBits + 8 * payload.size());
  out.push_uint(8 * payload.size(), kEnvelopeHeaderBits);
  for (std::uint8_t byte : payload) out.push_uint(byte, 8);
  return out;
}

std::vector<std::uint8_t> decode_envelope(const BitStream& bits) {
  if (bits.size() < kEnvelopeHeaderBits) {
    throw Error(Errc::TruncatedEnvelope, "fewer than 32 header bits");
  }
  const std::uint64_t length = bits.uint_at(0, kEnvelopeHeaderBits);
  if (length % 8 != 0) {
    throw Error(Errc::LengthNotByteAligned, "declared " + std::to_string(length) + " bits");
  }
  if (length > bits.size() - kEnvelopeHeaderBits) {
    throw Error(Errc::TruncatedEnvelope, "declared " + std::to_string(length) + " bits, " +
                                             std::to_string(bits.size() - kEnvelopeHeaderBits) +
                                             " available");
  }
  std::vector<std::uint8_t> payload(length / 8);
  for (std::size_t i = 0; i < payload.size(); ++i) {
    payload[i] = static_cast<std::uint8_t>(bits.uint_at(kEnvelopeHeaderBits + 8 * i, 8));
  }
  return payload;
}

}  // namespace rdh
