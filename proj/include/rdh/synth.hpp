#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "rdh/bit_io.hpp"
#include "rdh/image.hpp"

namespace rdh {

// Synthetic covers for self-contained benchmarks and tests.

GrayImage uniform_random_image(std::size_t height, std::size_t width, std::uint64_t seed);
GrayImage constant_image(std::size_t height, std::size_t width, std::uint8_t value);
/// Smooth diagonal ramp.
GrayImage gradient_image(std::size_t height, std::size_t width);
/// Random intensities with a fixed parity layout: a small bottom-left block of
/// embeddable horizontal pairs sized to just cover its own compressed map, and
/// even pixels on row 0 and every odd row. Both maps compress to a few dozen
/// bits, so a single in-band layer fits on covers about 64 pixels wide and up.
GrayImage block_parity_image(std::size_t height, std::size_t width, std::uint64_t seed);

/// Dispatches on "uniform", "constant", "gradient" or "block-parity".
GrayImage synthetic_image(std::string_view kind, std::size_t height, std::size_t width, std::uint64_t seed,
                          std::uint8_t value = 128);

/// Seeded uniform bits.
BitStream random_bits(std::size_t count, std::uint64_t seed);

}  // namespace rdh
