#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rdh/layer_codec.hpp"

namespace rdh {

// Sidecar files. A layer record is "PSM1", a mode byte, then the horizontal
// and vertical stage records; a difference-expansion record is "PSD1", a mode
// byte, then one stage record. A stage record is 32-bit rows, 32-bit cols and
// the compressed-map blob, all big-endian. Multi-layer files repeat records.

std::vector<std::uint8_t> encode_layer_sidecars(std::span<const LayerSidecar> layers, TransportMode mode);
/// Throws CorruptMapStream on truncation or a bad magic.
std::vector<LayerSidecar> decode_layer_sidecars(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_de_sidecars(std::span<const StageSidecar> layers, TransportMode mode);
std::vector<StageSidecar> decode_de_sidecars(std::span<const std::uint8_t> bytes);

}  // namespace rdh
