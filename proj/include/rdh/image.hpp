#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "rdh/bit_io.hpp"

namespace rdh {

/// 8-bit grayscale image, row-major. Pixel index of (row, col) is row * width + col.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(std::size_t height, std::size_t width, std::uint8_t fill = 0);
  GrayImage(std::size_t height, std::size_t width, std::vector<std::uint8_t> pixels);

  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t operator[](std::size_t p) const { return pixels_[p]; }
  std::uint8_t& operator[](std::size_t p) { return pixels_[p]; }
  std::uint8_t operator()(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }
  std::uint8_t& operator()(std::size_t row, std::size_t col) { return pixels_[row * width_ + col]; }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  bool same_shape(const GrayImage& other) const noexcept {
    return height_ == other.height_ && width_ == other.width_;
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Pixel pairs. `first`/`second` are row-major pixel indices; for horizontal
// pairs first = x (left), second = y (right); for vertical pairs first = u
// (top), second = v (bottom).
struct PixelPair {
  std::size_t first;
  std::size_t second;
};

struct HPairRef {
  std::size_t row;
  std::size_t col_left;
  std::size_t ordinal;
};

struct VPairRef {
  std::size_t col;
  std::size_t row_top;
  std::size_t ordinal;
};

/// Raster order: row 0 columns (0,1),(2,3),..., then row 1. Odd trailing column is unpaired.
std::vector<HPairRef> horizontal_pairs(const GrayImage& img);
/// Column 0 rows (0,1),(2,3),..., then column 1. Odd trailing row is unpaired.
std::vector<VPairRef> vertical_pairs(const GrayImage& img);

std::vector<PixelPair> horizontal_pixel_pairs(std::size_t height, std::size_t width);
std::vector<PixelPair> vertical_pixel_pairs(std::size_t height, std::size_t width);

// LSB region access, always row-major from pixel 0.
BitStream read_lsb_prefix(const GrayImage& img, std::size_t n);
GrayImage write_lsb_prefix(const GrayImage& img, const BitStream& bits);

// PGM (P5, maxval 255).
GrayImage decode_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_pgm(const GrayImage& img);

GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& img);

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path);
void write_binary_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace rdh
