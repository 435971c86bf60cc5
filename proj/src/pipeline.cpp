#include "rdh/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "rdh/error.hpp"
#include "rdh/metrics.hpp"

namespace rdh {

std::size_t PipelineTrace::secret_bits() const noexcept {
  std::size_t n = 0;
  for (const auto& l : layers) n += l.secret_bits();
  return n;
}

std::size_t PipelineTrace::gross_bits() const noexcept {
  std::size_t n = 0;
  for (const auto& l : layers) n += l.gross_bits();
  return n;
}

namespace {

void require_layers(std::size_t layers) {
  if (layers == 0) throw Error(Errc::InvalidArgument, "layer count must be at least 1");
}

// Each layer embeds at most one bit per pair in each stage, so H*W bits per
// layer is an upper bound on what it can consume.
BitStream zero_padded(BitStream bits, const GrayImage& cover, std::size_t layers) {
  const std::size_t total = bits.size() + layers * cover.size();
  bits.reserve(total);
  while (bits.size() < total) bits.push_back(false);
  return bits;
}

}  // namespace

MultiLayerEmbedResult embed_layers(const GrayImage& cover, BitStream& secret, std::size_t layers,
                                   TransportMode mode) {
  require_layers(layers);
  MultiLayerEmbedResult result;
  result.trace.mode = mode;
  GrayImage current = cover;
  for (std::size_t i = 0; i < layers; ++i) {
    LayerEmbedResult layer = embed_layer(current, secret, mode);
    if (auto sidecar = layer.sidecar()) result.sidecars.push_back(std::move(*sidecar));
    result.trace.layers.push_back(std::move(layer.trace));
    current = std::move(layer.stego);
  }
  result.stego = std::move(current);
  return result;
}

MultiLayerExtractResult extract_layers(const GrayImage& stego, std::size_t layers, TransportMode mode,
                                       std::span<const LayerSidecar> sidecars) {
  require_layers(layers);
  if (mode == TransportMode::Sidecar && sidecars.size() != layers) {
    throw Error(Errc::LayerCountMismatch, std::to_string(sidecars.size()) + " sidecar records for " +
                                              std::to_string(layers) + " layers");
  }
  std::vector<BitStream> per_layer(layers);
  std::vector<LayerTrace> traces(layers);
  GrayImage current = stego;
  for (std::size_t i = layers; i-- > 0;) {
    const LayerSidecar* sidecar = mode == TransportMode::Sidecar ? &sidecars[i] : nullptr;
    LayerExtractResult layer = extract_layer(current, mode, sidecar);
    per_layer[i] = std::move(layer.secret);
    traces[i] = std::move(layer.trace);
    current = std::move(layer.cover);
  }
  MultiLayerExtractResult result;
  for (const auto& bits : per_layer) result.secret.append(bits);
  result.cover = std::move(current);
  result.trace.mode = mode;
  result.trace.layers = std::move(traces);
  return result;
}

MultiLayerEmbedResult embed_multilayer(const GrayImage& cover, std::span<const std::uint8_t> payload,
                                       std::size_t layers, TransportMode mode) {
  require_layers(layers);
  const BitStream envelope = encode_envelope(payload);
  BitStream secret = zero_padded(envelope, cover, layers);
  MultiLayerEmbedResult result = embed_layers(cover, secret, layers, mode);
  if (secret.cursor() < envelope.size()) {
    throw Error(Errc::InsufficientCapacity, "envelope of " + std::to_string(envelope.size()) +
                                                " bits exceeds capacity of " +
                                                std::to_string(secret.cursor()) + " bits");
  }
  result.trace.payload_bits = envelope.size();
  return result;
}

PayloadExtractResult extract_multilayer(const GrayImage& stego, std::size_t layers, TransportMode mode,
                                        std::span<const LayerSidecar> sidecars) {
  MultiLayerExtractResult raw = extract_layers(stego, layers, mode, sidecars);
  std::vector<std::uint8_t> payload;
  try {
    payload = decode_envelope(raw.secret);
  } catch (const Error& e) {
    throw Error(Errc::LayerCountMismatch, std::string("envelope unreadable (") + e.what() + ")");
  }
  const std::size_t used = kEnvelopeHeaderBits + 8 * payload.size();
  const auto bits = raw.secret.bits();
  if (std::any_of(bits.begin() + static_cast<std::ptrdiff_t>(used), bits.end(),
                  [](std::uint8_t b) { return b != 0; })) {
    throw Error(Errc::LayerCountMismatch, "non-zero padding after the payload");
  }
  raw.trace.payload_bits = used;
  return {std::move(payload), std::move(raw.cover), std::move(raw.trace)};
}

CapacityReport capacity_probe(const GrayImage& cover, std::size_t layers, TransportMode mode) {
  require_layers(layers);
  BitStream zeros = zero_padded(BitStream{}, cover, layers);
  const MultiLayerEmbedResult embedded = embed_layers(cover, zeros, layers, mode);
  CapacityReport report = capacity_figures(embedded.trace, cover.height(), cover.width());
  report.psnr_db = psnr(cover, embedded.stego);
  return report;
}

std::string format_trace(const PipelineTrace& trace) {
  std::ostringstream out;
  out << "mode=" << to_string(trace.mode) << '\n';
  out << "k=" << trace.k() << '\n';
  out << "payloadBits=" << trace.payload_bits << '\n';
  for (std::size_t i = 0; i < trace.layers.size(); ++i) {
    const auto& l = trace.layers[i];
    const std::string p = "layer" + std::to_string(i + 1) + ".";
    out << p << "LE1=" << l.le1 << '\n' << p << "LE2=" << l.le2 << '\n';
    out << p << "LC1=" << l.lc1 << '\n' << p << "LC2=" << l.lc2 << '\n';
    out << p << "LS1=" << l.ls1 << '\n' << p << "LS2=" << l.ls2 << '\n';
  }
  return out.str();
}

std::string format_capacity(const CapacityReport& report) {
  std::ostringstream out;
  out << "height=" << report.height << '\n' << "width=" << report.width << '\n';
  out << "mode=" << to_string(report.mode) << '\n' << "k=" << report.layers.size() << '\n';
  for (std::size_t i = 0; i < report.layers.size(); ++i) {
    const auto& l = report.layers[i];
    const std::string p = "layer" + std::to_string(i + 1) + ".";
    out << p << "LE1=" << l.le1 << '\n' << p << "LE2=" << l.le2 << '\n';
    out << p << "LC1=" << l.lc1 << '\n' << p << "LC2=" << l.lc2 << '\n';
    out << p << "grossBits=" << l.gross_bits << '\n' << p << "netBits=" << l.net_bits << '\n';
    out << p << "sidecarBits=" << l.sidecar_bits << '\n';
  }
  out << "grossBits=" << report.gross_bits << '\n' << "netBits=" << report.net_bits << '\n';
  out << "inbandNetBits=" << report.inband_net_bits << '\n' << "sidecarBits=" << report.sidecar_bits << '\n';
  out << "grossBpp=" << report.gross_bpp << '\n' << "netBpp=" << report.net_bpp << '\n';
  out << "inbandNetBpp=" << report.inband_net_bpp << '\n' << "sidecarBpp=" << report.sidecar_bpp << '\n';
  out << "psnr_dB=" << format_db(report.psnr_db) << '\n';
  return out.str();
}

}  // namespace rdh
