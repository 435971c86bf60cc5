#include "rdh/synth.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "rdh/error.hpp"
#include "rdh/map_codec.hpp"

namespace rdh {

GrayImage uniform_random_image(std::size_t height, std::size_t width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  GrayImage img(height, width);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(dist(rng));
  return img;
}

GrayImage constant_image(std::size_t height, std::size_t width, std::uint8_t value) {
  return GrayImage(height, width, value);
}

GrayImage gradient_image(std::size_t height, std::size_t width) {
  GrayImage img(height, width);
  const std::size_t span = height + width > 2 ? height + width - 2 : 1;
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) img(r, c) = static_cast<std::uint8_t>(255 * (r + c) / span);
  }
  return img;
}

namespace {

// Parity layout: row 0 and odd rows even, every right pixel even, except a
// bottom-left block of horizontal pairs whose right pixel is odd. The block
// holds `lead` pairs in its first row and `cols` pairs in the rest.
GrayImage parity_layout(const GrayImage& base, std::size_t rows, std::size_t cols, std::size_t lead) {
  GrayImage img = base;
  const std::size_t h = img.height(), w = img.width();
  for (std::size_t r = 0; r < h; ++r) {
    const std::size_t in_block = r + rows < h ? 0 : (r + rows == h ? lead : cols);
    for (std::size_t c = 0; c < w; ++c) {
      std::uint8_t& p = img(r, c);
      if (c % 2 == 1 && c / 2 < in_block) {
        p |= 0x01u;
      } else if (r == 0 || r % 2 == 1 || c % 2 == 1) {
        p &= 0xFEu;
      }
    }
  }
  return img;
}

}  // namespace

GrayImage block_parity_image(std::size_t height, std::size_t width, std::uint64_t seed) {
  const GrayImage base = uniform_random_image(height, width, seed);
  if (height < 4 || width < 2) return parity_layout(base, 0, 0, 0);
  const std::size_t cols = std::min(width / 2, std::max<std::size_t>(1, (80 + height - 3) / (height - 2)));
  // Smallest block whose capacity just exceeds the compressed map, so only a
  // few secret bits land on odd rows.
  GrayImage fallback = parity_layout(base, height - 2, cols, cols);
  for (std::size_t rows = 2; rows + 2 <= height; rows += 2) {
    for (std::size_t lead = 1; lead <= cols; ++lead) {
      GrayImage img = parity_layout(base, rows, cols, lead);
      const LocationMap map = build_horizontal_map(img);
      const std::size_t le = map.ones();
      const std::size_t lc = compress_map(map).total_bits();
      if (le > lc && le - lc <= lead) return img;
      if (le > lc + cols) return fallback = img;
    }
  }
  return fallback;
}

GrayImage synthetic_image(std::string_view kind, std::size_t height, std::size_t width, std::uint64_t seed,
                          std::uint8_t value) {
  if (kind == "uniform") return uniform_random_image(height, width, seed);
  if (kind == "constant") return constant_image(height, width, value);
  if (kind == "gradient") return gradient_image(height, width);
  if (kind == "block-parity") return block_parity_image(height, width, seed);
  throw Error(Errc::InvalidArgument, "unknown synthetic image kind '" + std::string(kind) + "'");
}

BitStream random_bits(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bits(count);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 64 == 0) word = rng();
    bits[i] = (word >> (i % 64)) & 1u;
  }
  return BitStream(std::move(bits));
}

}  // namespace rdh
