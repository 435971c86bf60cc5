#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "rdh/bit_io.hpp"
#include "rdh/image.hpp"
#include "rdh/map_codec.hpp"

namespace rdh {

/// InBand carries the compressed maps in the image LSBs together with the
/// auxiliary streams; Sidecar hands them back as out-of-band blobs.
enum class TransportMode : std::uint8_t { InBand = 0, Sidecar = 1 };

std::string_view to_string(TransportMode mode) noexcept;
TransportMode parse_transport_mode(std::string_view text);

struct PairValues {
  std::uint8_t first;
  std::uint8_t second;
  friend bool operator==(const PairValues&, const PairValues&) = default;
};

struct PairExtraction {
  std::optional<bool> bit;
  std::uint8_t first;
  std::uint8_t second;
  friend bool operator==(const PairExtraction&, const PairExtraction&) = default;
};

// Pair rules. Embedding requires an embeddable pair (odd y, even v) and
// throws NotEmbeddable otherwise; extraction throws InconsistentMap when
// the received pair contradicts the map entry.
PairValues hr_apply(std::uint8_t x, std::uint8_t y, bool bit);
PairValues vr_apply(std::uint8_t u, std::uint8_t v, bool bit);
PairExtraction hx_apply(std::uint8_t x, std::uint8_t y, bool in_map);
PairExtraction vx_apply(std::uint8_t u, std::uint8_t v, bool in_map);

/// Bookkeeping of one embedding stage. `map_bits` is the full compressed map
/// length (header included) in either mode.
struct StageTrace {
  std::size_t embeddable = 0;
  std::size_t map_bits = 0;
  std::size_t secret_bits = 0;
  std::size_t map_rows = 0;
  std::size_t map_cols = 0;
  std::optional<CompressedMap> sidecar;
};

/// Out-of-band map of one stage, as stored in sidecar files.
struct StageSidecar {
  std::size_t rows = 0;
  std::size_t cols = 0;
  CompressedMap map;
  friend bool operator==(const StageSidecar&, const StageSidecar&) = default;
};

struct StagePlan {
  LocationMap map;
  CompressedMap compressed;
  std::size_t embeddable = 0;
  std::size_t map_bits = 0;
  std::size_t secret_bits = 0;
};

struct StageEmbedResult {
  GrayImage embedded;  // after the pair rule, before LSB replacement (T or V)
  GrayImage output;    // after LSB replacement (U or X)
  StageTrace trace;
};

struct StageExtractResult {
  GrayImage restored;
  BitStream secret;
  StageTrace trace;
};

/// Capacity of the horizontal stage on `img`. Throws InsufficientCapacity for
/// InBand when the compressed map does not fit.
StagePlan plan_horizontal_stage(const GrayImage& img, TransportMode mode);
StagePlan plan_vertical_stage(const GrayImage& img, TransportMode mode);

/// `secret` must hold exactly the planned secret bit count.
StageEmbedResult embed_horizontal_stage(const GrayImage& cover, const BitStream& secret, TransportMode mode);
StageEmbedResult embed_vertical_stage(const GrayImage& img, const BitStream& secret, TransportMode mode);

StageExtractResult extract_horizontal_stage(const GrayImage& img, TransportMode mode,
                                            const StageSidecar* sidecar = nullptr);
StageExtractResult extract_vertical_stage(const GrayImage& img, TransportMode mode,
                                          const StageSidecar* sidecar = nullptr);

struct LayerTrace {
  TransportMode mode = TransportMode::Sidecar;
  std::size_t le1 = 0, le2 = 0;
  std::size_t lc1 = 0, lc2 = 0;
  std::size_t ls1 = 0, ls2 = 0;
  std::optional<StageSidecar> sidecar_cm1;
  std::optional<StageSidecar> sidecar_cm2;

  std::size_t secret_bits() const noexcept { return ls1 + ls2; }
  std::size_t gross_bits() const noexcept { return le1 + le2; }
};

struct LayerSidecar {
  StageSidecar horizontal;
  StageSidecar vertical;
  friend bool operator==(const LayerSidecar&, const LayerSidecar&) = default;
};

struct LayerEmbedResult {
  GrayImage stego;
  LayerTrace trace;
  std::optional<LayerSidecar> sidecar() const;
};

struct LayerExtractResult {
  BitStream secret;
  GrayImage cover;
  LayerTrace trace;
};

/// One full layer: HEM, CM1, VEM, CM2. Consumes LS1 + LS2 bits from `secret`
/// starting at its cursor; throws SecretExhausted if they are not there.
LayerEmbedResult embed_layer(const GrayImage& cover, BitStream& secret, TransportMode mode);
LayerExtractResult extract_layer(const GrayImage& stego, TransportMode mode,
                                 const LayerSidecar* sidecar = nullptr);

}  // namespace rdh
