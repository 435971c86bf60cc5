#include <doctest.h>

#include <random>
#include <string>

#include "rdh/image.hpp"
#include "rdh/synth.hpp"
#include "test_support.hpp"

using namespace rdh;
using rdh::test::error_of;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& header, std::vector<std::uint8_t> body) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

}  // namespace

TEST_CASE("decode_pgm reads P5 images") {
  const GrayImage img = decode_pgm(bytes_of("P5\n2 2\n255\n", {10, 11, 12, 14}));
  CHECK(img.height() == 2);
  CHECK(img.width() == 2);
  CHECK(img(0, 0) == 10);
  CHECK(img(0, 1) == 11);
  CHECK(img(1, 0) == 12);
  CHECK(img(1, 1) == 14);

  const GrayImage commented = decode_pgm(bytes_of("P5\n# made by hand\n2 1\n255\n", {1, 2}));
  CHECK(commented.pixels()[1] == 2);
}

TEST_CASE("decode_pgm rejects bad input") {
  CHECK(error_of([] { decode_pgm(bytes_of("P2\n2 2\n255\n", {1, 2, 3, 4})); }) == Errc::MalformedHeader);
  CHECK(error_of([] { decode_pgm(bytes_of("P5\n2 2\n65535\n", {1, 2, 3, 4})); }) == Errc::UnsupportedMaxval);
  CHECK(error_of([] { decode_pgm(bytes_of("P5\n2 2\n255\n", {1, 2, 3})); }) == Errc::TruncatedData);
  CHECK(error_of([] { decode_pgm(bytes_of("P5\n2\n", {})); }) == Errc::MalformedHeader);
}

TEST_CASE("encode_pgm writes the canonical header") {
  CHECK(encode_pgm(GrayImage(1, 1, 0)) == bytes_of("P5\n1 1\n255\n", {0}));
  const GrayImage img(2, 2, std::vector<std::uint8_t>{10, 11, 12, 14});
  CHECK(encode_pgm(img) == bytes_of("P5\n2 2\n255\n", {10, 11, 12, 14}));
}

TEST_CASE("PGM round trip on random images") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 50; ++n) {
    const GrayImage img = uniform_random_image(1 + rng() % 40, 1 + rng() % 40, rng());
    CHECK(decode_pgm(encode_pgm(img)) == img);
  }
}

TEST_CASE("horizontal pair enumeration") {
  auto h22 = horizontal_pairs(GrayImage(2, 2));
  REQUIRE(h22.size() == 2);
  CHECK(h22[0].row == 0);
  CHECK(h22[1].row == 1);

  auto h23 = horizontal_pairs(GrayImage(2, 3));
  REQUIRE(h23.size() == 2);
  CHECK(h23[0].col_left == 0);
  CHECK(h23[1].col_left == 0);

  auto h24 = horizontal_pairs(GrayImage(2, 4));
  REQUIRE(h24.size() == 4);
  const std::size_t rows[] = {0, 0, 1, 1}, cols[] = {0, 2, 0, 2};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(h24[i].row == rows[i]);
    CHECK(h24[i].col_left == cols[i]);
    CHECK(h24[i].ordinal == i);
  }
}

TEST_CASE("vertical pair enumeration") {
  auto v22 = vertical_pairs(GrayImage(2, 2));
  REQUIRE(v22.size() == 2);
  CHECK(v22[0].col == 0);
  CHECK(v22[1].col == 1);
  CHECK(vertical_pairs(GrayImage(3, 2)).size() == 2);

  auto v41 = vertical_pairs(GrayImage(4, 1));
  REQUIRE(v41.size() == 2);
  CHECK(v41[0].row_top == 0);
  CHECK(v41[1].row_top == 2);

  // Column-major: all of column 0 before column 1.
  auto pp = vertical_pixel_pairs(4, 2);
  REQUIRE(pp.size() == 4);
  CHECK(pp[0].first == 0);
  CHECK(pp[0].second == 2);
  CHECK(pp[1].first == 4);
  CHECK(pp[1].second == 6);
  CHECK(pp[2].first == 1);
}

TEST_CASE("pair enumerations partition the pairable pixels") {
  for (std::size_t h = 1; h <= 7; ++h) {
    for (std::size_t w = 1; w <= 7; ++w) {
      std::vector<int> hits(h * w, 0), vhits(h * w, 0);
      for (auto p : horizontal_pixel_pairs(h, w)) {
        ++hits[p.first];
        ++hits[p.second];
        CHECK(p.second == p.first + 1);
      }
      for (auto p : vertical_pixel_pairs(h, w)) {
        ++vhits[p.first];
        ++vhits[p.second];
        CHECK(p.second == p.first + w);
      }
      for (std::size_t q = 0; q < h * w; ++q) {
        CHECK(hits[q] == ((q % w) < (w / 2) * 2 ? 1 : 0));
        CHECK(vhits[q] == ((q / w) < (h / 2) * 2 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("LSB prefix read and write") {
  const GrayImage img(2, 2, std::vector<std::uint8_t>{10, 11, 12, 14});
  CHECK(read_lsb_prefix(img, 4) == BitStream{0, 1, 0, 0});
  CHECK(read_lsb_prefix(img, 0).empty());
  CHECK(error_of([&] { read_lsb_prefix(img, 5); }) == Errc::RegionTooLarge);

  const GrayImage px(1, 3, std::vector<std::uint8_t>{100, 101, 254});
  const GrayImage out = write_lsb_prefix(px, BitStream{1, 0, 1});
  CHECK(out[0] == 101);
  CHECK(out[1] == 100);
  CHECK(out[2] == 255);
  CHECK(error_of([&] { write_lsb_prefix(px, BitStream{1, 1, 1, 1}); }) == Errc::RegionTooLarge);
}

TEST_CASE("LSB prefix write then read is identity and touches only the prefix") {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 200; ++n) {
    const GrayImage img = uniform_random_image(1 + rng() % 20, 1 + rng() % 20, rng());
    const std::size_t count = rng() % (img.size() + 1);
    const BitStream bits = random_bits(count, rng());
    const GrayImage out = write_lsb_prefix(img, bits);
    CHECK(read_lsb_prefix(out, count) == bits);
    for (std::size_t q = 0; q < img.size(); ++q) {
      const int d = std::abs(int(out[q]) - int(img[q]));
      CHECK(d <= (q < count ? 1 : 0));
    }
  }
}

TEST_CASE("image constructor checks pixel count") {
  CHECK(error_of([] { GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3}); }) == Errc::DimensionMismatch);
}
