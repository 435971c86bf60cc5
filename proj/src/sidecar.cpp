#include "rdh/sidecar.hpp"

#include <string_view>

#include "rdh/error.hpp"

namespace rdh {

namespace {

constexpr std::string_view kLayerMagic = "PSM1";
constexpr std::string_view kDeMagic = "PSD1";

void put_u32(std::vector<std::uint8_t>& out, std::size_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::size_t get_u32(std::span<const std::uint8_t> bytes, std::size_t& offset) {
  if (bytes.size() < offset + 4) throw Error(Errc::CorruptMapStream, "truncated sidecar");
  std::size_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | bytes[offset + i];
  offset += 4;
  return v;
}

void put_stage(std::vector<std::uint8_t>& out, const StageSidecar& stage) {
  put_u32(out, stage.rows);
  put_u32(out, stage.cols);
  const auto blob = stage.map.to_blob();
  out.insert(out.end(), blob.begin(), blob.end());
}

StageSidecar get_stage(std::span<const std::uint8_t> bytes, std::size_t& offset) {
  StageSidecar stage;
  stage.rows = get_u32(bytes, offset);
  stage.cols = get_u32(bytes, offset);
  stage.map = parse_compressed_map_blob(bytes, offset);
  return stage;
}

void put_header(std::vector<std::uint8_t>& out, std::string_view magic, TransportMode mode) {
  out.insert(out.end(), magic.begin(), magic.end());
  out.push_back(static_cast<std::uint8_t>(mode));
}

void get_header(std::span<const std::uint8_t> bytes, std::size_t& offset, std::string_view magic) {
  if (bytes.size() < offset + 5) throw Error(Errc::CorruptMapStream, "truncated sidecar record");
  if (std::string_view(reinterpret_cast<const char*>(bytes.data() + offset), 4) != magic) {
    throw Error(Errc::CorruptMapStream, "bad sidecar magic");
  }
  if (bytes[offset + 4] > 1) throw Error(Errc::CorruptMapStream, "bad sidecar mode byte");
  offset += 5;
}

}  // namespace

std::vector<std::uint8_t> encode_layer_sidecars(std::span<const LayerSidecar> layers, TransportMode mode) {
  std::vector<std::uint8_t> out;
  for (const auto& layer : layers) {
    put_header(out, kLayerMagic, mode);
    put_stage(out, layer.horizontal);
    put_stage(out, layer.vertical);
  }
  return out;
}

std::vector<LayerSidecar> decode_layer_sidecars(std::span<const std::uint8_t> bytes) {
  std::vector<LayerSidecar> layers;
  std::size_t offset = 0;
  while (offset < bytes.size()) {
    get_header(bytes, offset, kLayerMagic);
    LayerSidecar layer;
    layer.horizontal = get_stage(bytes, offset);
    layer.vertical = get_stage(bytes, offset);
    layers.push_back(std::move(layer));
  }
  return layers;
}

std::vector<std::uint8_t> encode_de_sidecars(std::span<const StageSidecar> layers, TransportMode mode) {
  std::vector<std::uint8_t> out;
  for (const auto& stage : layers) {
    put_header(out, kDeMagic, mode);
    put_stage(out, stage);
  }
  return out;
}

std::vector<StageSidecar> decode_de_sidecars(std::span<const std::uint8_t> bytes) {
  std::vector<StageSidecar> layers;
  std::size_t offset = 0;
  while (offset < bytes.size()) {
    get_header(bytes, offset, kDeMagic);
    layers.push_back(get_stage(bytes, offset));
  }
  return layers;
}

}  // namespace rdh
