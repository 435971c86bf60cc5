#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rdh/bit_io.hpp"
#include "rdh/image.hpp"
#include "rdh/layer_codec.hpp"

namespace rdh {

struct PipelineTrace {
  std::vector<LayerTrace> layers;
  TransportMode mode = TransportMode::Sidecar;
  std::size_t payload_bits = 0;

  std::size_t k() const noexcept { return layers.size(); }
  std::size_t secret_bits() const noexcept;
  std::size_t gross_bits() const noexcept;
};

struct MultiLayerEmbedResult {
  GrayImage stego;
  PipelineTrace trace;
  std::vector<LayerSidecar> sidecars;  // one per layer in Sidecar mode, empty otherwise
};

struct MultiLayerExtractResult {
  BitStream secret;  // layer 1 bits first
  GrayImage cover;
  PipelineTrace trace;
};

struct PayloadExtractResult {
  std::vector<std::uint8_t> payload;
  GrayImage cover;
  PipelineTrace trace;
};

/// Applies embed_layer `layers` times, each layer reading its bits from `secret`.
MultiLayerEmbedResult embed_layers(const GrayImage& cover, BitStream& secret, std::size_t layers,
                                   TransportMode mode);
/// Undoes `layers` layers, outermost first, and returns the bits in embedding order.
MultiLayerExtractResult extract_layers(const GrayImage& stego, std::size_t layers, TransportMode mode,
                                       std::span<const LayerSidecar> sidecars = {});

/// Envelopes `payload`, pads with zeros, and fills layers greedily from layer 1.
/// Throws InsufficientCapacity when the envelope does not fit.
MultiLayerEmbedResult embed_multilayer(const GrayImage& cover, std::span<const std::uint8_t> payload,
                                       std::size_t layers, TransportMode mode);
/// Throws LayerCountMismatch when the recovered stream is not a well-formed
/// envelope followed by zero padding, or the sidecar count differs from `layers`.
PayloadExtractResult extract_multilayer(const GrayImage& stego, std::size_t layers, TransportMode mode,
                                        std::span<const LayerSidecar> sidecars = {});

struct LayerCapacity {
  std::size_t le1 = 0, le2 = 0, lc1 = 0, lc2 = 0;
  long long gross_bits = 0;
  long long net_bits = 0;        // InBand: gross - LC1 - LC2; Sidecar: gross
  long long inband_net_bits = 0; // gross - LC1 - LC2 in either mode
  long long sidecar_bits = 0;    // Sidecar: LC1 + LC2; InBand: 0
};

struct CapacityReport {
  std::size_t height = 0;
  std::size_t width = 0;
  TransportMode mode = TransportMode::Sidecar;
  std::vector<LayerCapacity> layers;
  long long gross_bits = 0;
  long long net_bits = 0;
  long long inband_net_bits = 0;
  long long sidecar_bits = 0;
  double gross_bpp = 0;
  double net_bpp = 0;
  double inband_net_bpp = 0;
  double sidecar_bpp = 0;
  double psnr_db = 0;
};

/// Embeds an all-zero secret through `layers` layers and reports capacity and PSNR.
CapacityReport capacity_probe(const GrayImage& cover, std::size_t layers, TransportMode mode);

/// key=value text, one field per line, using the LayerTrace field names.
std::string format_trace(const PipelineTrace& trace);
std::string format_capacity(const CapacityReport& report);

}  // namespace rdh
