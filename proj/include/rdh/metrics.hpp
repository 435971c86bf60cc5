#pragma once

#include <cstdint>
#include <string>

#include "rdh/image.hpp"
#include "rdh/pipeline.hpp"

namespace rdh {

struct QualityResult {
  double mse = 0;
  double psnr_db = 0;  // +inf for identical images
};

/// Exact sum of squared pixel differences. Throws DimensionMismatch.
std::uint64_t squared_error_sum(const GrayImage& a, const GrayImage& b);
double mse(const GrayImage& a, const GrayImage& b);
double psnr(const GrayImage& a, const GrayImage& b);
QualityResult quality(const GrayImage& a, const GrayImage& b);

/// 10 log10(255^2 / mse), +inf when mse is zero.
double psnr_from_mse(double mse);
/// "inf" for infinite PSNR, otherwise four decimals.
std::string format_db(double psnr_db);

/// Per-layer and total gross/net bit counts with bpp = bits / (height * width).
CapacityReport capacity_figures(const PipelineTrace& trace, std::size_t height, std::size_t width);

}  // namespace rdh
