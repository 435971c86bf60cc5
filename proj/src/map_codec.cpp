#include "rdh/map_codec.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "rdh/arith_coder.hpp"
#include "rdh/error.hpp"

namespace rdh {

std::size_t LocationMap::ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

BitStream CompressedMap::serialize() const {
  BitStream out;
  out.reserve(total_bits());
  out.push_uint(body.size(), kHeaderBits);
  out.append(body);
  return out;
}

std::vector<std::uint8_t> CompressedMap::to_blob() const {
  std::vector<std::uint8_t> out;
  const auto n = static_cast<std::uint32_t>(body.size());
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(n >> shift));
  const auto packed = body.to_bytes();
  out.insert(out.end(), packed.begin(), packed.end());
  return out;
}

CompressedMap parse_compressed_map(const BitStream& bits) {
  if (bits.size() < CompressedMap::kHeaderBits) {
    throw Error(Errc::CorruptMapStream, "missing map header");
  }
  const std::uint64_t length = bits.uint_at(0, CompressedMap::kHeaderBits);
  if (length > bits.size() - CompressedMap::kHeaderBits) {
    throw Error(Errc::CorruptMapStream, "header claims " + std::to_string(length) + " body bits, " +
                                            std::to_string(bits.size() - CompressedMap::kHeaderBits) +
                                            " available");
  }
  return CompressedMap{bits.slice(CompressedMap::kHeaderBits, length)};
}

CompressedMap parse_compressed_map_blob(std::span<const std::uint8_t> bytes, std::size_t& offset) {
  if (bytes.size() < offset + 4) throw Error(Errc::CorruptMapStream, "truncated map blob header");
  std::uint64_t length = 0;
  for (int i = 0; i < 4; ++i) length = (length << 8) | bytes[offset + i];
  offset += 4;
  const std::size_t body_bytes = (length + 7) / 8;
  if (bytes.size() - offset < body_bytes) throw Error(Errc::CorruptMapStream, "truncated map blob body");
  CompressedMap cm{BitStream::from_bytes(bytes.subspan(offset, body_bytes), length)};
  offset += body_bytes;
  return cm;
}

LocationMap build_horizontal_map(const GrayImage& img) {
  LocationMap map{img.height(), img.width() / 2, ScanOrder::RowMajor, {}};
  map.bits.reserve(map.rows * map.cols);
  for (const auto& pair : horizontal_pixel_pairs(img.height(), img.width())) {
    map.bits.push_back(img[pair.second] & 1u);
  }
  return map;
}

LocationMap build_vertical_map(const GrayImage& img) {
  LocationMap map{img.height() / 2, img.width(), ScanOrder::ColumnMajor, {}};
  map.bits.reserve(map.rows * map.cols);
  for (const auto& pair : vertical_pixel_pairs(img.height(), img.width())) {
    map.bits.push_back((img[pair.second] & 1u) == 0 ? 1 : 0);
  }
  return map;
}

namespace {

std::size_t context_of(const std::vector<std::uint8_t>& bits, std::size_t i, std::size_t line) {
  if (i >= line) return bits[i - line];
  return i > 0 ? bits[i - 1] : 0;
}

}  // namespace

CompressedMap compress_map(const LocationMap& map) {
  if (map.bits.empty()) return CompressedMap{};
  const std::size_t line = map.line_length();
  std::array<AdaptiveBitModel, 2> models;
  ArithmeticEncoder encoder;
  for (std::size_t i = 0; i < map.bits.size(); ++i) {
    encoder.encode(map.bits[i] != 0, models[context_of(map.bits, i, line)]);
  }
  return CompressedMap{encoder.finish()};
}

LocationMap decompress_map(const CompressedMap& cm, std::size_t rows, std::size_t cols, ScanOrder order) {
  LocationMap map{rows, cols, order, {}};
  const std::size_t count = rows * cols;
  if (count == 0) {
    if (!cm.body.empty()) throw Error(Errc::CorruptMapStream, "non-empty body for empty map");
    return map;
  }
  const std::size_t limit = cm.body.size() + kDecoderLookahead;
  const std::size_t line = map.line_length();
  map.bits.reserve(count);
  std::array<AdaptiveBitModel, 2> models;
  ArithmeticDecoder decoder(cm.body);
  for (std::size_t i = 0; i < count; ++i) {
    map.bits.push_back(decoder.decode(models[context_of(map.bits, i, line)]) ? 1 : 0);
    if (decoder.bits_consumed() > limit) {
      throw Error(Errc::CorruptMapStream, "body exhausted after " + std::to_string(i + 1) + " of " +
                                              std::to_string(count) + " entries");
    }
  }
  if (decoder.bits_consumed() != limit) {
    throw Error(Errc::CorruptMapStream, "body length " + std::to_string(cm.body.size()) +
                                            " inconsistent with decoded entries");
  }
  return map;
}

}  // namespace rdh
