#include <doctest.h>

#include <random>

#include "rdh/bit_io.hpp"
#include "rdh/synth.hpp"
#include "test_support.hpp"

using namespace rdh;
using rdh::test::error_of;

TEST_CASE("envelope encoding") {
  const BitStream empty = encode_envelope({});
  CHECK(empty.size() == 32);
  CHECK(empty.uint_at(0, 32) == 0);

  const std::uint8_t ab[] = {0xAB};
  const BitStream one = encode_envelope(ab);
  REQUIRE(one.size() == 40);
  CHECK(one.uint_at(0, 32) == 8);
  CHECK(one.slice(32, 8) == BitStream{1, 0, 1, 0, 1, 0, 1, 1});
}

TEST_CASE("envelope decoding") {
  CHECK(decode_envelope(BitStream(std::vector<std::uint8_t>(32, 0))).empty());

  BitStream s;
  s.push_uint(8, 32);
  s.append(BitStream{1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 0, 0, 1, 0, 1});
  CHECK(decode_envelope(s) == std::vector<std::uint8_t>{0xAB});

  BitStream short_body;
  short_body.push_uint(16, 32);
  short_body.append(BitStream{1, 0, 1, 0, 1, 0, 1, 1});
  CHECK(error_of([&] { decode_envelope(short_body); }) == Errc::TruncatedEnvelope);

  BitStream odd;
  odd.push_uint(5, 32);
  odd.append(BitStream{1, 1, 1, 1, 1, 0, 0, 0});
  CHECK(error_of([&] { decode_envelope(odd); }) == Errc::LengthNotByteAligned);

  CHECK(error_of([] { decode_envelope(BitStream{0, 0, 0}); }) == Errc::TruncatedEnvelope);
}

TEST_CASE("envelope round trip with trailing junk") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 300; ++n) {
    std::vector<std::uint8_t> payload(rng() % 64);
    for (auto& b : payload) b = std::uint8_t(rng());
    BitStream s = encode_envelope(payload);
    s.append(random_bits(rng() % 100, rng()));
    CHECK(decode_envelope(s) == payload);
  }
}

TEST_CASE("bit stream reads and byte packing") {
  BitStream s;
  s.push_uint(0xA5, 8);
  s.push_uint(3, 3);
  CHECK(s.size() == 11);
  CHECK(s.to_bytes() == std::vector<std::uint8_t>{0xA5, 0x60});
  CHECK(BitStream::from_bytes(s.to_bytes(), 11) == s);

  CHECK(s.read_uint(8) == 0xA5);
  CHECK(s.remaining() == 3);
  CHECK(s.read_bits(3) == BitStream{0, 1, 1});
  CHECK(error_of([&] { s.read(); }) == Errc::SecretExhausted);
  s.rewind();
  CHECK(s.cursor() == 0);
}
