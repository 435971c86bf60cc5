#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rdh/image.hpp"
#include "rdh/layer_codec.hpp"

namespace rdh {

enum class Method { Proposed, DifferenceExpansion };

std::string_view to_string(Method method) noexcept;
Method parse_method(std::string_view text);

/// A cover on disk or a synthetic generator description.
struct ImageSource {
  std::string id;
  std::optional<std::filesystem::path> path;
  std::string kind = "uniform";
  std::size_t height = 512;
  std::size_t width = 512;
  std::uint64_t seed = 1;
  std::uint8_t value = 128;

  GrayImage load() const;
};

struct BenchConfig {
  std::vector<ImageSource> images;
  std::vector<Method> methods{Method::Proposed};
  std::vector<std::size_t> layers{1, 2, 5};
  TransportMode mode = TransportMode::Sidecar;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> output;

  static BenchConfig from_json(const nlohmann::json& j);
};

struct BenchRow {
  std::string image;
  Method method = Method::Proposed;
  std::size_t k = 1;
  std::size_t pixels = 0;
  std::size_t gross_bits = 0;
  std::size_t map_bits = 0;
  double gross_bpp = 0;
  double net_bpp = 0;      // gross minus all compressed-map bits, whichever way they travel
  double sidecar_bpp = 0;  // map bits carried out of band
  double psnr_db = 0;
  double embed_ms = 0;
  double extract_ms = 0;
  bool ok = false;
};

/// A (image, method, k) combination that could not be embedded, e.g. an
/// in-band run whose maps do not fit.
struct BenchFailure {
  std::string image;
  Method method = Method::Proposed;
  std::size_t k = 1;
  std::string error;
};

struct BenchReport {
  TransportMode mode = TransportMode::Sidecar;
  std::vector<BenchRow> rows;
  std::vector<BenchFailure> failures;
};

/// Embeds a full seeded random secret for every (image, method, k), verifies
/// the exact round trip and records capacity and PSNR. A round-trip mismatch
/// throws; capacity errors are collected as failures.
BenchReport run_bench(const BenchConfig& config);

/// One measured row for a single cover.
BenchRow bench_one(const GrayImage& cover, std::string_view id, Method method, std::size_t layers,
                   TransportMode mode, std::uint64_t seed);

/// Reference figures the benchmark compares against for the proposed method.
struct ClaimThreshold {
  std::size_t k;
  double bpp;
  double psnr_db;
};
std::optional<ClaimThreshold> claim_for(Method method, std::size_t k);

std::string format_report_text(const BenchReport& report, bool with_timing = true);
std::string format_report_csv(const BenchReport& report, bool with_timing = true);
std::string format_report_markdown(const BenchReport& report);

}  // namespace rdh
