#include "stage_engine.hpp"

#include <string>

#include "rdh/error.hpp"

namespace rdh::detail {

namespace {

std::string count_str(std::size_t n) { return std::to_string(n); }

// Ordinals of embeddable pairs, in scan order.
std::vector<std::size_t> embeddable_ordinals(const LocationMap& map) {
  std::vector<std::size_t> out;
  out.reserve(map.ones());
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i]) out.push_back(i);
  }
  return out;
}

// The last `lc` embeddable pairs carry the auxiliary bits and must sit wholly
// outside the LSB region of `lc` pixels.
void check_tail_separation(const StageLayout& layout, const std::vector<std::size_t>& embeddable,
                           std::size_t lc) {
  for (std::size_t k = embeddable.size() - lc; k < embeddable.size(); ++k) {
    const PixelPair& pair = layout.pairs[embeddable[k]];
    if (pair.first < lc || pair.second < lc) {
      throw Error(Errc::OverlapViolation, "auxiliary pair " + count_str(embeddable[k]) +
                                              " overlaps the first " + count_str(lc) + " pixels");
    }
  }
}

StageTrace make_trace(const StageLayout& layout, std::size_t le, std::size_t lc, std::size_t ls) {
  StageTrace trace;
  trace.embeddable = le;
  trace.map_bits = lc;
  trace.secret_bits = ls;
  trace.map_rows = layout.map_rows;
  trace.map_cols = layout.map_cols;
  return trace;
}

}  // namespace

StageLayout horizontal_layout(const GrayImage& img) {
  return {horizontal_pixel_pairs(img.height(), img.width()), img.height(), img.width() / 2,
          ScanOrder::RowMajor};
}

StageLayout vertical_layout(const GrayImage& img) {
  return {vertical_pixel_pairs(img.height(), img.width()), img.height() / 2, img.width(),
          ScanOrder::ColumnMajor};
}

LocationMap build_stage_map(const GrayImage& img, const StageLayout& layout, const PairRule& rule) {
  LocationMap map{layout.map_rows, layout.map_cols, layout.order, {}};
  map.bits.reserve(layout.pairs.size());
  for (const auto& pair : layout.pairs) {
    map.bits.push_back(rule.embeddable(img[pair.first], img[pair.second]) ? 1 : 0);
  }
  return map;
}

std::vector<std::size_t> aux_pixel_order(const StageLayout& layout, std::size_t region,
                                         std::size_t pixel_count) {
  std::vector<std::uint8_t> paired(region, 0);
  std::vector<std::size_t> from_pairs;
  from_pairs.reserve(region);
  for (const auto& pair : layout.pairs) {
    for (std::size_t p : {pair.first, pair.second}) {
      if (p < region) {
        paired[p] = 1;
        from_pairs.push_back(p);
      }
    }
  }
  std::vector<std::size_t> order;
  order.reserve(region);
  for (std::size_t p = 0; p < region && p < pixel_count; ++p) {
    if (!paired[p]) order.push_back(p);
  }
  order.insert(order.end(), from_pairs.begin(), from_pairs.end());
  return order;
}

StagePlan plan_stage(const GrayImage& img, const StageLayout& layout, const PairRule& rule,
                     TransportMode mode) {
  StagePlan plan;
  plan.map = build_stage_map(img, layout, rule);
  plan.compressed = compress_map(plan.map);
  plan.embeddable = plan.map.ones();
  plan.map_bits = plan.compressed.total_bits();
  if (mode == TransportMode::Sidecar) {
    plan.secret_bits = plan.embeddable;
    return plan;
  }
  if (plan.map_bits > img.size()) {
    throw Error(Errc::InsufficientCapacity, "compressed map of " + count_str(plan.map_bits) +
                                                " bits exceeds " + count_str(img.size()) + " pixels");
  }
  if (plan.map_bits > plan.embeddable) {
    throw Error(Errc::InsufficientCapacity, "compressed map of " + count_str(plan.map_bits) +
                                                " bits exceeds " + count_str(plan.embeddable) +
                                                " embeddable pairs");
  }
  plan.secret_bits = plan.embeddable - plan.map_bits;
  return plan;
}

StageEmbedResult embed_stage(const GrayImage& img, const StageLayout& layout, const PairRule& rule,
                             const BitStream& secret, TransportMode mode) {
  StagePlan plan = plan_stage(img, layout, rule, mode);
  if (secret.size() != plan.secret_bits) {
    throw Error(Errc::InsufficientCapacity, "stage takes exactly " + count_str(plan.secret_bits) +
                                                " secret bits, got " + count_str(secret.size()));
  }
  const std::size_t lc = mode == TransportMode::InBand ? plan.map_bits : 0;

  // Bit queue B = S || A, where A grows as region pixels are finalized.
  std::vector<std::uint8_t> queue(secret.bits().begin(), secret.bits().end());
  queue.reserve(plan.embeddable);
  std::vector<std::uint8_t> paired(lc, 0);
  for (const auto& pair : layout.pairs) {
    if (pair.first < lc) paired[pair.first] = 1;
    if (pair.second < lc) paired[pair.second] = 1;
  }
  for (std::size_t p = 0; p < lc; ++p) {
    if (!paired[p]) queue.push_back(img[p] & 1u);
  }

  GrayImage out = img;
  std::size_t consumed = 0;
  for (std::size_t i = 0; i < layout.pairs.size(); ++i) {
    const PixelPair& pair = layout.pairs[i];
    if (plan.map[i]) {
      if (consumed >= queue.size()) {
        throw Error(Errc::AuxOrderingViolation,
                    "pair " + count_str(i) + " needs bit " + count_str(consumed) +
                        " before it is produced");
      }
      const PairValues v = rule.embed(out[pair.first], out[pair.second], queue[consumed++] != 0);
      out[pair.first] = v.first;
      out[pair.second] = v.second;
    }
    if (pair.first < lc) queue.push_back(out[pair.first] & 1u);
    if (pair.second < lc) queue.push_back(out[pair.second] & 1u);
  }
  if (consumed != plan.embeddable || queue.size() != plan.embeddable) {
    throw Error(Errc::AuxOrderingViolation, "auxiliary stream not fully embedded");
  }
  if (lc > 0) check_tail_separation(layout, embeddable_ordinals(plan.map), lc);

  StageEmbedResult result;
  result.trace = make_trace(layout, plan.embeddable, plan.map_bits, plan.secret_bits);
  result.embedded = out;
  if (mode == TransportMode::InBand) {
    result.output = write_lsb_prefix(out, plan.compressed.serialize());
  } else {
    result.output = std::move(out);
    result.trace.sidecar = plan.compressed;
  }
  return result;
}

StageExtractResult extract_stage(const GrayImage& img, const StageLayout& layout, const PairRule& rule,
                                 TransportMode mode, const StageSidecar* sidecar) {
  CompressedMap cm;
  if (mode == TransportMode::InBand) {
    if (img.size() < CompressedMap::kHeaderBits) {
      throw Error(Errc::CorruptMapStream, "image too small to hold a map header");
    }
    const std::uint64_t body = read_lsb_prefix(img, CompressedMap::kHeaderBits).uint_at(0, 32);
    if (body > img.size() - CompressedMap::kHeaderBits) {
      throw Error(Errc::CorruptMapStream, "map header claims " + count_str(body) + " body bits");
    }
    cm = parse_compressed_map(read_lsb_prefix(img, CompressedMap::kHeaderBits + body));
  } else {
    if (sidecar == nullptr) throw Error(Errc::InvalidArgument, "sidecar map required");
    if (sidecar->rows != layout.map_rows || sidecar->cols != layout.map_cols) {
      throw Error(Errc::CorruptMapStream,
                  "sidecar map " + count_str(sidecar->rows) + "x" + count_str(sidecar->cols) +
                      " does not match " + count_str(layout.map_rows) + "x" + count_str(layout.map_cols));
    }
    cm = sidecar->map;
  }
  const LocationMap map = decompress_map(cm, layout.map_rows, layout.map_cols, layout.order);
  const auto embeddable = embeddable_ordinals(map);
  const std::size_t le = embeddable.size();
  const std::size_t lc = mode == TransportMode::InBand ? cm.total_bits() : 0;
  if (lc > le) {
    throw Error(Errc::CorruptMapStream, "map of " + count_str(lc) + " bits cannot fit " +
                                            count_str(le) + " embeddable pairs");
  }

  GrayImage work = img;
  std::vector<std::uint8_t> aux;
  if (lc > 0) {
    check_tail_separation(layout, embeddable, lc);
    aux.reserve(lc);
    for (std::size_t k = le - lc; k < le; ++k) {
      const PixelPair& pair = layout.pairs[embeddable[k]];
      aux.push_back(*rule.extract(work[pair.first], work[pair.second], true).bit ? 1 : 0);
    }
    const auto order = aux_pixel_order(layout, lc, img.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
      work[order[j]] = static_cast<std::uint8_t>((work[order[j]] & 0xFEu) | aux[j]);
    }
  }

  std::vector<std::uint8_t> bits;
  bits.reserve(le);
  for (std::size_t i = 0; i < layout.pairs.size(); ++i) {
    const PixelPair& pair = layout.pairs[i];
    const PairExtraction ex = rule.extract(work[pair.first], work[pair.second], map[i]);
    if (ex.bit) bits.push_back(*ex.bit ? 1 : 0);
    work[pair.first] = ex.first;
    work[pair.second] = ex.second;
  }
  if (bits.size() != le) {
    throw Error(Errc::InconsistentMap, "extracted " + count_str(bits.size()) + " bits from " +
                                           count_str(le) + " embeddable pairs");
  }

  StageExtractResult result;
  result.trace = make_trace(layout, le, cm.total_bits(), le - lc);
  if (mode == TransportMode::Sidecar) result.trace.sidecar = cm;
  bits.resize(le - lc);
  result.secret = BitStream(std::move(bits));
  result.restored = std::move(work);
  return result;
}

}  // namespace rdh::detail
