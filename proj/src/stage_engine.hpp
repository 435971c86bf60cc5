#pragma once

// Generic single-stage embed/extract over a fixed pair layout. The horizontal
// and vertical stages and the difference-expansion baseline are all
// instances with different pair rules.

#include <cstddef>
#include <vector>

#include "rdh/layer_codec.hpp"

namespace rdh::detail {

struct PairRule {
  bool (*embeddable)(std::uint8_t first, std::uint8_t second);
  PairValues (*embed)(std::uint8_t first, std::uint8_t second, bool bit);
  PairExtraction (*extract)(std::uint8_t first, std::uint8_t second, bool in_map);
};

struct StageLayout {
  std::vector<PixelPair> pairs;
  std::size_t map_rows = 0;
  std::size_t map_cols = 0;
  ScanOrder order = ScanOrder::RowMajor;
};

StageLayout horizontal_layout(const GrayImage& img);
StageLayout vertical_layout(const GrayImage& img);

LocationMap build_stage_map(const GrayImage& img, const StageLayout& layout, const PairRule& rule);

StagePlan plan_stage(const GrayImage& img, const StageLayout& layout, const PairRule& rule,
                     TransportMode mode);

StageEmbedResult embed_stage(const GrayImage& img, const StageLayout& layout, const PairRule& rule,
                             const BitStream& secret, TransportMode mode);

StageExtractResult extract_stage(const GrayImage& img, const StageLayout& layout, const PairRule& rule,
                                 TransportMode mode, const StageSidecar* sidecar);

/// Order in which LSBs of the first `region` pixels join the auxiliary stream:
/// unpaired region pixels (row-major) first, then region pixels as their
/// pairs are scanned.
std::vector<std::size_t> aux_pixel_order(const StageLayout& layout, std::size_t region,
                                         std::size_t pixel_count);

}  // namespace rdh::detail
