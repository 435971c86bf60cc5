#include "rdh/layer_codec.hpp"

#include <string>

#include "rdh/error.hpp"
#include "stage_engine.hpp"

namespace rdh {

std::string_view to_string(TransportMode mode) noexcept {
  return mode == TransportMode::InBand ? "inband" : "sidecar";
}

TransportMode parse_transport_mode(std::string_view text) {
  if (text == "inband") return TransportMode::InBand;
  if (text == "sidecar") return TransportMode::Sidecar;
  throw Error(Errc::InvalidArgument, "unknown mode '" + std::string(text) + "'");
}

PairValues hr_apply(std::uint8_t x, std::uint8_t y, bool bit) {
  if ((y & 1u) == 0) throw Error(Errc::NotEmbeddable, "horizontal pair needs odd y, got " + std::to_string(y));
  return bit ? PairValues{x, y} : PairValues{x, static_cast<std::uint8_t>(y - 1)};
}

PairValues vr_apply(std::uint8_t u, std::uint8_t v, bool bit) {
  if ((v & 1u) != 0) throw Error(Errc::NotEmbeddable, "vertical pair needs even v, got " + std::to_string(v));
  return bit ? PairValues{u, static_cast<std::uint8_t>(v + 1)} : PairValues{u, v};
}

PairExtraction hx_apply(std::uint8_t x, std::uint8_t y, bool in_map) {
  if (y & 1u) {
    if (!in_map) throw Error(Errc::InconsistentMap, "odd y outside the horizontal map");
    return {true, x, y};
  }
  if (in_map) return {false, x, static_cast<std::uint8_t>(y + 1)};
  return {std::nullopt, x, y};
}

PairExtraction vx_apply(std::uint8_t u, std::uint8_t v, bool in_map) {
  if ((v & 1u) == 0) {
    if (!in_map) throw Error(Errc::InconsistentMap, "even v outside the vertical map");
    return {false, u, v};
  }
  if (in_map) return {true, u, static_cast<std::uint8_t>(v - 1)};
  return {std::nullopt, u, v};
}

namespace {

const detail::PairRule kHorizontalRule{
    [](std::uint8_t, std::uint8_t y) { return (y & 1u) != 0; },
    &hr_apply,
    &hx_apply,
};

const detail::PairRule kVerticalRule{
    [](std::uint8_t, std::uint8_t v) { return (v & 1u) == 0; },
    &vr_apply,
    &vx_apply,
};

std::optional<StageSidecar> to_stage_sidecar(const StageTrace& trace) {
  if (!trace.sidecar) return std::nullopt;
  return StageSidecar{trace.map_rows, trace.map_cols, *trace.sidecar};
}

}  // namespace

StagePlan plan_horizontal_stage(const GrayImage& img, TransportMode mode) {
  return detail::plan_stage(img, detail::horizontal_layout(img), kHorizontalRule, mode);
}

StagePlan plan_vertical_stage(const GrayImage& img, TransportMode mode) {
  return detail::plan_stage(img, detail::vertical_layout(img), kVerticalRule, mode);
}

StageEmbedResult embed_horizontal_stage(const GrayImage& cover, const BitStream& secret, TransportMode mode) {
  return detail::embed_stage(cover, detail::horizontal_layout(cover), kHorizontalRule, secret, mode);
}

StageEmbedResult embed_vertical_stage(const GrayImage& img, const BitStream& secret, TransportMode mode) {
  return detail::embed_stage(img, detail::vertical_layout(img), kVerticalRule, secret, mode);
}

StageExtractResult extract_horizontal_stage(const GrayImage& img, TransportMode mode,
                                            const StageSidecar* sidecar) {
  return detail::extract_stage(img, detail::horizontal_layout(img), kHorizontalRule, mode, sidecar);
}

StageExtractResult extract_vertical_stage(const GrayImage& img, TransportMode mode,
                                          const StageSidecar* sidecar) {
  return detail::extract_stage(img, detail::vertical_layout(img), kVerticalRule, mode, sidecar);
}

std::optional<LayerSidecar> LayerEmbedResult::sidecar() const {
  if (!trace.sidecar_cm1 || !trace.sidecar_cm2) return std::nullopt;
  return LayerSidecar{*trace.sidecar_cm1, *trace.sidecar_cm2};
}

LayerEmbedResult embed_layer(const GrayImage& cover, BitStream& secret, TransportMode mode) {
  const StagePlan first = plan_horizontal_stage(cover, mode);
  const BitStream s1 = secret.read_bits(first.secret_bits);
  StageEmbedResult horizontal = embed_horizontal_stage(cover, s1, mode);

  const StagePlan second = plan_vertical_stage(horizontal.output, mode);
  const BitStream s2 = secret.read_bits(second.secret_bits);
  StageEmbedResult vertical = embed_vertical_stage(horizontal.output, s2, mode);

  LayerEmbedResult result;
  result.stego = std::move(vertical.output);
  result.trace.mode = mode;
  result.trace.le1 = horizontal.trace.embeddable;
  result.trace.lc1 = horizontal.trace.map_bits;
  result.trace.ls1 = horizontal.trace.secret_bits;
  result.trace.le2 = vertical.trace.embeddable;
  result.trace.lc2 = vertical.trace.map_bits;
  result.trace.ls2 = vertical.trace.secret_bits;
  result.trace.sidecar_cm1 = to_stage_sidecar(horizontal.trace);
  result.trace.sidecar_cm2 = to_stage_sidecar(vertical.trace);
  return result;
}

LayerExtractResult extract_layer(const GrayImage& stego, TransportMode mode, const LayerSidecar* sidecar) {
  if (mode == TransportMode::Sidecar && sidecar == nullptr) {
    throw Error(Errc::InvalidArgument, "sidecar maps required");
  }
  const StageSidecar* cm2 = sidecar ? &sidecar->vertical : nullptr;
  const StageSidecar* cm1 = sidecar ? &sidecar->horizontal : nullptr;

  StageExtractResult vertical = extract_vertical_stage(stego, mode, cm2);
  StageExtractResult horizontal = extract_horizontal_stage(vertical.restored, mode, cm1);

  LayerExtractResult result;
  result.secret = std::move(horizontal.secret);
  result.secret.append(vertical.secret);
  result.cover = std::move(horizontal.restored);
  result.trace.mode = mode;
  result.trace.le1 = horizontal.trace.embeddable;
  result.trace.lc1 = horizontal.trace.map_bits;
  result.trace.ls1 = horizontal.trace.secret_bits;
  result.trace.le2 = vertical.trace.embeddable;
  result.trace.lc2 = vertical.trace.map_bits;
  result.trace.ls2 = vertical.trace.secret_bits;
  result.trace.sidecar_cm1 = to_stage_sidecar(horizontal.trace);
  result.trace.sidecar_cm2 = to_stage_sidecar(vertical.trace);
  return result;
}

}  // namespace rdh
