#include "rdh/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "rdh/error.hpp"

namespace rdh {

std::uint64_t squared_error_sum(const GrayImage& a, const GrayImage& b) {
  if (!a.same_shape(b)) throw Error(Errc::DimensionMismatch, "images differ in size");
  std::uint64_t sum = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    const int d = static_cast<int>(a[p]) - static_cast<int>(b[p]);
    sum += static_cast<std::uint64_t>(d * d);
  }
  return sum;
}

double mse(const GrayImage& a, const GrayImage& b) {
  const std::uint64_t sum = squared_error_sum(a, b);
  return a.size() == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(a.size());
}

double psnr_from_mse(double value) {
  if (value == 0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / value);
}

double psnr(const GrayImage& a, const GrayImage& b) { return psnr_from_mse(mse(a, b)); }

QualityResult quality(const GrayImage& a, const GrayImage& b) {
  const double m = mse(a, b);
  return {m, psnr_from_mse(m)};
}

std::string format_db(double psnr_db) {
  if (std::isinf(psnr_db)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", psnr_db);
  return buf;
}

CapacityReport capacity_figures(const PipelineTrace& trace, std::size_t height, std::size_t width) {
  CapacityReport report;
  report.height = height;
  report.width = width;
  report.mode = trace.mode;
  for (const auto& layer : trace.layers) {
    LayerCapacity c;
    c.le1 = layer.le1;
    c.le2 = layer.le2;
    c.lc1 = layer.lc1;
    c.lc2 = layer.lc2;
    c.gross_bits = static_cast<long long>(layer.le1 + layer.le2);
    c.inband_net_bits = c.gross_bits - static_cast<long long>(layer.lc1 + layer.lc2);
    if (trace.mode == TransportMode::InBand) {
      c.net_bits = c.inband_net_bits;
    } else {
      c.net_bits = c.gross_bits;
      c.sidecar_bits = static_cast<long long>(layer.lc1 + layer.lc2);
    }
    report.gross_bits += c.gross_bits;
    report.net_bits += c.net_bits;
    report.inband_net_bits += c.inband_net_bits;
    report.sidecar_bits += c.sidecar_bits;
    report.layers.push_back(c);
  }
  const double pixels = static_cast<double>(height * width);
  if (pixels > 0) {
    report.gross_bpp = static_cast<double>(report.gross_bits) / pixels;
    report.net_bpp = static_cast<double>(report.net_bits) / pixels;
    report.inband_net_bpp = static_cast<double>(report.inband_net_bits) / pixels;
    report.sidecar_bpp = static_cast<double>(report.sidecar_bits) / pixels;
  }
  return report;
}

}  // namespace rdh
