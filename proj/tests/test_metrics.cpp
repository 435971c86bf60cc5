#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "rdh/metrics.hpp"
#include "rdh/pipeline.hpp"
#include "rdh/synth.hpp"
#include "test_support.hpp"

using namespace rdh;
using rdh::test::error_of;

TEST_CASE("mse examples") {
  const GrayImage a = uniform_random_image(8, 8, 1);
  CHECK(mse(a, a) == 0.0);
  CHECK(mse(GrayImage(1, 1, 0), GrayImage(1, 1, 255)) == 65025.0);
  GrayImage b(2, 2, 10), c(2, 2, 10);
  c[3] = 11;
  CHECK(mse(b, c) == 0.25);
  CHECK(error_of([] { mse(GrayImage(2, 2), GrayImage(2, 3)); }) == Errc::DimensionMismatch);
}

TEST_CASE("psnr examples") {
  CHECK(psnr_from_mse(65025.0) == doctest::Approx(0.0));
  CHECK(format_db(psnr_from_mse(0.25)) == "54.1514");
  CHECK(format_db(psnr_from_mse(0.5)) == "51.1411");
  const GrayImage a = uniform_random_image(4, 4, 2);
  CHECK(std::isinf(psnr(a, a)));
  CHECK(format_db(psnr(a, a)) == "inf");
}

TEST_CASE("psnr matches the closed form on crafted differences") {
  for (int denom : {8, 4, 2}) {
    GrayImage a = uniform_random_image(32, 32, 3);
    for (auto& p : a.pixels()) p = std::max<std::uint8_t>(p, 1);
    GrayImage b = a;
    for (std::size_t q = 0; q < b.size(); q += denom) b[q] -= 1;
    CHECK(std::abs(psnr(a, b) - 10.0 * std::log10(65025.0 * denom)) <= 1e-9);
  }
}

TEST_CASE("mse is symmetric and agrees with a direct sum") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 50; ++n) {
    const std::size_t h = 1 + rng() % 30, w = 1 + rng() % 30;
    const GrayImage a = uniform_random_image(h, w, rng()), b = uniform_random_image(h, w, rng());
    double sum = 0;
    for (std::size_t q = 0; q < a.size(); ++q) sum += (double(a[q]) - b[q]) * (double(a[q]) - b[q]);
    CHECK(mse(a, b) == doctest::Approx(sum / double(a.size())).epsilon(1e-12));
    CHECK(mse(a, b) == mse(b, a));
    CHECK(squared_error_sum(a, b) == std::uint64_t(sum));
  }
}

TEST_CASE("capacity figures") {
  PipelineTrace one;
  one.mode = TransportMode::Sidecar;
  LayerTrace l;
  l.mode = TransportMode::Sidecar;
  l.le1 = l.le2 = 65536;
  one.layers.push_back(l);
  CHECK(capacity_figures(one, 512, 512).gross_bpp == 0.5);

  PipelineTrace five = one;
  five.layers.assign(5, l);
  CHECK(capacity_figures(five, 512, 512).gross_bpp == 2.5);

  PipelineTrace hypothetical;
  hypothetical.mode = TransportMode::InBand;
  LayerTrace h;
  h.mode = TransportMode::InBand;
  h.le1 = 100;
  h.lc1 = 120;
  hypothetical.layers.push_back(h);
  CHECK(capacity_figures(hypothetical, 64, 64).net_bits == -20);
}
