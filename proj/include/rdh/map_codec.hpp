#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rdh/bit_io.hpp"
#include "rdh/image.hpp"

namespace rdh {

enum class ScanOrder : std::uint8_t { RowMajor, ColumnMajor };

/// One-bit map over pair positions, stored in scan order (entry i belongs to
/// the pair with ordinal i). HL is row-major, VL column-major.
struct LocationMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  ScanOrder order = ScanOrder::RowMajor;
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  std::size_t ones() const noexcept;
  /// Number of entries in one scan line (a row for row-major, a column otherwise).
  std::size_t line_length() const noexcept { return order == ScanOrder::RowMajor ? cols : rows; }
  bool operator[](std::size_t i) const { return bits[i] != 0; }

  friend bool operator==(const LocationMap&, const LocationMap&) = default;
};

/// 32-bit big-endian body length followed by the arithmetic-coded body.
struct CompressedMap {
  static constexpr std::size_t kHeaderBits = 32;

  BitStream body;

  std::size_t total_bits() const noexcept { return kHeaderBits + body.size(); }
  /// Header and body as one stream (the in-band LSB payload).
  BitStream serialize() const;
  /// Byte blob: 4-byte big-endian body length, then body bits packed MSB-first.
  std::vector<std::uint8_t> to_blob() const;

  friend bool operator==(const CompressedMap& a, const CompressedMap& b) { return a.body == b.body; }
};

/// Parses header + body from the front of `bits`; throws CorruptMapStream if
/// the header claims more bits than are present.
CompressedMap parse_compressed_map(const BitStream& bits);
/// Parses a blob at `offset` and advances it.
CompressedMap parse_compressed_map_blob(std::span<const std::uint8_t> bytes, std::size_t& offset);

/// HL: entry is 1 iff the right pixel y of the horizontal pair is odd.
LocationMap build_horizontal_map(const GrayImage& img);
/// VL: entry is 1 iff the bottom pixel v of the vertical pair is even.
LocationMap build_vertical_map(const GrayImage& img);

/// Adaptive binary arithmetic coding with two contexts selected by the entry
/// one scan line back (or the previous entry while on the first line).
CompressedMap compress_map(const LocationMap& map);
LocationMap decompress_map(const CompressedMap& cm, std::size_t rows, std::size_t cols,
                           ScanOrder order = ScanOrder::RowMajor);

}  // namespace rdh
