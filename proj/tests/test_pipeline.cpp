#include <doctest.h>

#include <random>

#include "rdh/pipeline.hpp"
#include "rdh/synth.hpp"
#include "test_support.hpp"

using namespace rdh;
using rdh::test::error_of;

namespace {

std::vector<std::uint8_t> random_payload(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = std::uint8_t(rng());
  return out;
}

}  // namespace

TEST_CASE("empty payload, one layer") {
  const GrayImage cover = uniform_random_image(16, 16, 1);
  const auto e = embed_multilayer(cover, {}, 1, TransportMode::Sidecar);
  const auto x = extract_multilayer(e.stego, 1, TransportMode::Sidecar, e.sidecars);
  CHECK(x.payload.empty());
  CHECK(x.cover == cover);
}

TEST_CASE("two layers carry a 512-byte payload") {
  const GrayImage cover = uniform_random_image(128, 128, 2);
  const auto payload = random_payload(512, 3);
  const auto e = embed_multilayer(cover, payload, 2, TransportMode::Sidecar);
  CHECK(e.trace.k() == 2);
  CHECK(e.sidecars.size() == 2);
  const auto x = extract_multilayer(e.stego, 2, TransportMode::Sidecar, e.sidecars);
  CHECK(x.payload == payload);
  CHECK(x.cover == cover);
}

TEST_CASE("five layers exceed 2 bpp") {
  const GrayImage cover = uniform_random_image(512, 512, 4);
  const CapacityReport report = capacity_probe(cover, 5, TransportMode::Sidecar);
  CHECK(report.layers.size() == 5);
  CHECK(report.gross_bpp >= 2.0);
}

TEST_CASE("multi-layer bit streams round trip for k = 1..5") {
  std::mt19937_64 rng(5);
  for (std::size_t k = 1; k <= 5; ++k) {
    for (int n = 0; n < 20; ++n) {
      const GrayImage cover = uniform_random_image(2 + 2 * (rng() % 20), 2 + 2 * (rng() % 20), rng());
      BitStream secret = random_bits(k * cover.size(), rng());
      const auto e = embed_layers(cover, secret, k, TransportMode::Sidecar);
      CHECK(e.trace.secret_bits() == secret.cursor());
      const auto x = extract_layers(e.stego, k, TransportMode::Sidecar, e.sidecars);
      CHECK(x.cover == cover);
      CHECK(x.secret == secret.slice(0, secret.cursor()));
    }
  }
}

TEST_CASE("in-band payload on a block-parity cover") {
  const GrayImage cover = block_parity_image(128, 128, 6);
  const auto payload = random_payload(200, 7);
  const auto e = embed_multilayer(cover, payload, 1, TransportMode::InBand);
  CHECK(e.sidecars.empty());
  const auto x = extract_multilayer(e.stego, 1, TransportMode::InBand);
  CHECK(x.payload == payload);
  CHECK(x.cover == cover);
}

TEST_CASE("wrong layer count is reported") {
  const GrayImage cover = uniform_random_image(64, 64, 8);
  const auto payload = random_payload(420, 9);
  const auto e = embed_multilayer(cover, payload, 2, TransportMode::Sidecar);
  CHECK(error_of([&] { extract_multilayer(e.stego, 1, TransportMode::Sidecar, e.sidecars); }) ==
        Errc::LayerCountMismatch);
  const std::vector<LayerSidecar> outer{e.sidecars[1]};
  CHECK(error_of([&] { extract_multilayer(e.stego, 1, TransportMode::Sidecar, outer); }) ==
        Errc::LayerCountMismatch);
}

TEST_CASE("a stranger's sidecar on an untouched image never yields a payload silently") {
  const GrayImage natural = uniform_random_image(64, 64, 10);
  const GrayImage other = uniform_random_image(64, 64, 11);
  const auto e = embed_multilayer(other, random_payload(100, 12), 1, TransportMode::Sidecar);
  const auto code = error_of([&] { extract_multilayer(natural, 1, TransportMode::Sidecar, e.sidecars); });
  REQUIRE(code);
  CHECK((*code == Errc::CorruptMapStream || *code == Errc::InconsistentMap || *code == Errc::LayerCountMismatch));
}

TEST_CASE("payload larger than capacity") {
  const GrayImage cover = uniform_random_image(16, 16, 13);
  CHECK(error_of([&] { embed_multilayer(cover, random_payload(200, 1), 1, TransportMode::Sidecar); }) ==
        Errc::InsufficientCapacity);
}

TEST_CASE("capacity probe on an all-even image") {
  const GrayImage even(64, 64, 8);
  const CapacityReport r = capacity_probe(even, 1, TransportMode::Sidecar);
  REQUIRE(r.layers.size() == 1);
  CHECK(r.layers[0].le1 == 0);
  CHECK(r.layers[0].le2 == 32 * 64);

  const GrayImage tiny(2, 2, 8);
  BitStream two{1, 0};
  const auto e = embed_layers(tiny, two, 1, TransportMode::Sidecar);
  CHECK(e.trace.layers[0].ls1 == 0);
  CHECK(e.trace.layers[0].ls2 == 2);
}

TEST_CASE("in-band transport is infeasible on random parity") {
  const GrayImage cover = uniform_random_image(128, 128, 14);
  CHECK(error_of([&] { capacity_probe(cover, 1, TransportMode::InBand); }) == Errc::InsufficientCapacity);
}

TEST_CASE("gross capacity grows with the layer count") {
  const GrayImage cover = uniform_random_image(96, 96, 15);
  double previous = 0;
  for (std::size_t k = 1; k <= 5; ++k) {
    const double gross = capacity_probe(cover, k, TransportMode::Sidecar).gross_bpp;
    CHECK(gross > previous);
    previous = gross;
  }
}

TEST_CASE("probe matches an empty-payload embedding") {
  const GrayImage cover = uniform_random_image(64, 80, 16);
  const CapacityReport r = capacity_probe(cover, 2, TransportMode::Sidecar);
  const auto e = embed_multilayer(cover, {}, 2, TransportMode::Sidecar);
  REQUIRE(e.trace.layers.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(r.layers[i].le1 == e.trace.layers[i].le1);
    CHECK(r.layers[i].le2 == e.trace.layers[i].le2);
  }
  // With an all-zero secret the second-stage fraction rises to 3/8 bpp.
  const CapacityReport big = capacity_probe(uniform_random_image(512, 512, 17), 1, TransportMode::Sidecar);
  CHECK(big.gross_bpp == doctest::Approx(0.625).epsilon(0.01));
}

TEST_CASE("trace formatting") {
  const GrayImage cover = uniform_random_image(32, 32, 18);
  const auto e = embed_multilayer(cover, random_payload(10, 1), 2, TransportMode::Sidecar);
  const std::string text = format_trace(e.trace);
  CHECK(text.find("mode=sidecar") != std::string::npos);
  CHECK(text.find("k=2") != std::string::npos);
  CHECK(text.find("layer2.LE1=") != std::string::npos);
}
