#include "rdh/image.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "rdh/error.hpp"

namespace rdh {

GrayImage::GrayImage(std::size_t height, std::size_t width, std::uint8_t fill)
    : height_(height), width_(width), pixels_(height * width, fill) {}

GrayImage::GrayImage(std::size_t height, std::size_t width, std::vector<std::uint8_t> pixels)
    : height_(height), width_(width), pixels_(std::move(pixels)) {
  if (pixels_.size() != height * width) {
    throw Error(Errc::DimensionMismatch, "pixel count " + std::to_string(pixels_.size()) +
                                             " != " + std::to_string(height) + "x" +
                                             std::to_string(width));
  }
}

std::vector<HPairRef> horizontal_pairs(const GrayImage& img) {
  std::vector<HPairRef> out;
  const std::size_t per_row = img.width() / 2;
  out.reserve(img.height() * per_row);
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t k = 0; k < per_row; ++k) out.push_back({r, 2 * k, out.size()});
  }
  return out;
}

std::vector<VPairRef> vertical_pairs(const GrayImage& img) {
  std::vector<VPairRef> out;
  const std::size_t per_col = img.height() / 2;
  out.reserve(img.width() * per_col);
  for (std::size_t c = 0; c < img.width(); ++c) {
    for (std::size_t k = 0; k < per_col; ++k) out.push_back({c, 2 * k, out.size()});
  }
  return out;
}

std::vector<PixelPair> horizontal_pixel_pairs(std::size_t height, std::size_t width) {
  std::vector<PixelPair> out;
  out.reserve(height * (width / 2));
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c + 1 < width; c += 2) out.push_back({r * width + c, r * width + c + 1});
  }
  return out;
}

std::vector<PixelPair> vertical_pixel_pairs(std::size_t height, std::size_t width) {
  std::vector<PixelPair> out;
  out.reserve((height / 2) * width);
  for (std::size_t c = 0; c < width; ++c) {
    for (std::size_t r = 0; r + 1 < height; r += 2) out.push_back({r * width + c, (r + 1) * width + c});
  }
  return out;
}

BitStream read_lsb_prefix(const GrayImage& img, std::size_t n) {
  if (n > img.size()) {
    throw Error(Errc::RegionTooLarge, std::to_string(n) + " > " + std::to_string(img.size()));
  }
  std::vector<std::uint8_t> bits(n);
  for (std::size_t p = 0; p < n; ++p) bits[p] = img[p] & 1u;
  return BitStream(std::move(bits));
}

GrayImage write_lsb_prefix(const GrayImage& img, const BitStream& bits) {
  if (bits.size() > img.size()) {
    throw Error(Errc::RegionTooLarge, std::to_string(bits.size()) + " > " + std::to_string(img.size()));
  }
  GrayImage out = img;
  for (std::size_t p = 0; p < bits.size(); ++p) {
    out[p] = static_cast<std::uint8_t>((out[p] & 0xFEu) | (bits[p] ? 1u : 0u));
  }
  return out;
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t number(const char* field) {
    skip_space_and_comments();
    std::size_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > (std::size_t{1} << 32)) throw Error(Errc::MalformedHeader, std::string(field) + " too large");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw Error(Errc::MalformedHeader, std::string("non-numeric ") + field);
    return value;
  }

  std::size_t pos_ = 0;
  std::span<const std::uint8_t> bytes_;
};

}  // namespace

GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(Errc::MalformedHeader, "expected magic P5");
  }
  HeaderReader reader(bytes);
  reader.pos_ = 2;
  const std::size_t width = reader.number("width");
  const std::size_t height = reader.number("height");
  const std::size_t maxval = reader.number("maxval");
  if (width == 0 || height == 0) throw Error(Errc::MalformedHeader, "zero dimension");
  if (maxval != 255) throw Error(Errc::UnsupportedMaxval, "maxval " + std::to_string(maxval));
  if (reader.pos_ >= bytes.size() || !std::isspace(bytes[reader.pos_])) {
    throw Error(Errc::MalformedHeader, "missing whitespace after maxval");
  }
  const std::size_t start = reader.pos_ + 1;
  const std::size_t count = width * height;
  if (bytes.size() - start < count) {
    throw Error(Errc::TruncatedData, std::to_string(bytes.size() - start) + " of " +
                                         std::to_string(count) + " pixel bytes");
  }
  return GrayImage(height, width,
                   std::vector<std::uint8_t>(bytes.begin() + start, bytes.begin() + start + count));
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

void write_binary_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

GrayImage read_pgm_file(const std::filesystem::path& path) { return decode_pgm(read_binary_file(path)); }

void write_pgm_file(const std::filesystem::path& path, const GrayImage& img) {
  write_binary_file(path, encode_pgm(img));
}

}  // namespace rdh
