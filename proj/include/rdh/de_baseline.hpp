#pragma once

#include <cstdint>
#include <optional>

#include "rdh/bit_io.hpp"
#include "rdh/image.hpp"
#include "rdh/layer_codec.hpp"

namespace rdh {

// Difference expansion on horizontal pairs, used as the comparison baseline.
// Only expandable pairs carry bits; no difference threshold is applied.

struct DEPairState {
  int average;     // l = floor((x + y) / 2)
  int difference;  // h = x - y
  bool expandable;
};

DEPairState de_analyze(std::uint8_t x, std::uint8_t y) noexcept;

/// Expands the pair difference to 2h + b. Returns nullopt for pairs that
/// would leave [0, 255] for either bit value.
std::optional<PairValues> de_transform(std::uint8_t x, std::uint8_t y, bool bit) noexcept;

struct DERecovered {
  std::uint8_t x;
  std::uint8_t y;
  bool bit;
};

/// Inverse of de_transform. nullopt if the recovered pair is out of range,
/// which cannot happen for a pair produced by de_transform.
std::optional<DERecovered> de_inverse(std::uint8_t x, std::uint8_t y) noexcept;

struct DETrace {
  TransportMode mode = TransportMode::Sidecar;
  std::size_t expandable = 0;
  std::size_t map_bits = 0;
  std::size_t secret_bits = 0;
  std::optional<StageSidecar> sidecar;
};

struct DEEmbedResult {
  GrayImage stego;
  DETrace trace;
};

struct DEExtractResult {
  BitStream secret;
  GrayImage cover;
  DETrace trace;
};

/// Consumes the stage's secret bit count from `secret` at its cursor.
DEEmbedResult de_embed(const GrayImage& cover, BitStream& secret, TransportMode mode);
DEExtractResult de_extract(const GrayImage& stego, TransportMode mode, const StageSidecar* sidecar = nullptr);

}  // namespace rdh
