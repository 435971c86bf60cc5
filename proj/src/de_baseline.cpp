#include "rdh/de_baseline.hpp"

#include <algorithm>
#include <cstdlib>

#include "rdh/error.hpp"
#include "stage_engine.hpp"

namespace rdh {

namespace {

bool fits(int average, int expanded) {
  return std::abs(expanded) <= std::min(2 * (255 - average), 2 * average + 1);
}

// Arithmetic shift is floor division by two for negative values as well.
int floor_half(int v) { return v >> 1; }

PairValues embed_expandable(std::uint8_t x, std::uint8_t y, bool bit) {
  auto out = de_transform(x, y, bit);
  if (!out) throw Error(Errc::NotEmbeddable, "pair is not expandable");
  return *out;
}

PairExtraction extract_expandable(std::uint8_t x, std::uint8_t y, bool in_map) {
  if (!in_map) return {std::nullopt, x, y};
  auto rec = de_inverse(x, y);
  if (!rec) throw Error(Errc::InconsistentMap, "expanded pair inverts out of range");
  return {rec->bit, rec->x, rec->y};
}

const detail::PairRule kDifferenceExpansionRule{
    [](std::uint8_t x, std::uint8_t y) { return de_analyze(x, y).expandable; },
    &embed_expandable,
    &extract_expandable,
};

DETrace to_de_trace(TransportMode mode, const StageTrace& trace) {
  DETrace out;
  out.mode = mode;
  out.expandable = trace.embeddable;
  out.map_bits = trace.map_bits;
  out.secret_bits = trace.secret_bits;
  if (trace.sidecar) out.sidecar = StageSidecar{trace.map_rows, trace.map_cols, *trace.sidecar};
  return out;
}

}  // namespace

DEPairState de_analyze(std::uint8_t x, std::uint8_t y) noexcept {
  const int l = floor_half(x + y);
  const int h = x - y;
  return {l, h, fits(l, 2 * h) && fits(l, 2 * h + 1)};
}

std::optional<PairValues> de_transform(std::uint8_t x, std::uint8_t y, bool bit) noexcept {
  const DEPairState s = de_analyze(x, y);
  if (!s.expandable) return std::nullopt;
  const int expanded = 2 * s.difference + (bit ? 1 : 0);
  const int nx = s.average + floor_half(expanded + 1);
  const int ny = s.average - floor_half(expanded);
  return PairValues{static_cast<std::uint8_t>(nx), static_cast<std::uint8_t>(ny)};
}

std::optional<DERecovered> de_inverse(std::uint8_t x, std::uint8_t y) noexcept {
  const int l = floor_half(x + y);
  const int expanded = x - y;
  const bool bit = (expanded & 1) != 0;
  const int h = floor_half(expanded);
  const int ox = l + floor_half(h + 1);
  const int oy = l - floor_half(h);
  if (ox < 0 || ox > 255 || oy < 0 || oy > 255) return std::nullopt;
  return DERecovered{static_cast<std::uint8_t>(ox), static_cast<std::uint8_t>(oy), bit};
}

DEEmbedResult de_embed(const GrayImage& cover, BitStream& secret, TransportMode mode) {
  const auto layout = detail::horizontal_layout(cover);
  const StagePlan plan = detail::plan_stage(cover, layout, kDifferenceExpansionRule, mode);
  const BitStream bits = secret.read_bits(plan.secret_bits);
  StageEmbedResult stage = detail::embed_stage(cover, layout, kDifferenceExpansionRule, bits, mode);
  return {std::move(stage.output), to_de_trace(mode, stage.trace)};
}

DEExtractResult de_extract(const GrayImage& stego, TransportMode mode, const StageSidecar* sidecar) {
  StageExtractResult stage =
      detail::extract_stage(stego, detail::horizontal_layout(stego), kDifferenceExpansionRule, mode, sidecar);
  return {std::move(stage.secret), std::move(stage.restored), to_de_trace(mode, stage.trace)};
}

}  // namespace rdh
