#include "rdh/arith_coder.hpp"

namespace rdh {

namespace {
constexpr std::uint64_t kHalf = 1ull << 31;
constexpr std::uint64_t kQuarter = 1ull << 30;
constexpr std::uint64_t kThreeQuarters = kHalf + kQuarter;

std::uint64_t split_point(std::uint64_t low, std::uint64_t high, const AdaptiveBitModel& model) {
  const std::uint64_t range = high - low + 1;
  return low + range * model.zeros() / model.total();
}
}  // namespace

void AdaptiveBitModel::update(bool bit) noexcept {
  (bit ? c1_ : c0_) += 1;
  if (c0_ + c1_ >= kRescaleAt) {
    c0_ = (c0_ + 1) / 2;
    c1_ = (c1_ + 1) / 2;
  }
}

void ArithmeticEncoder::emit(bool bit) {
  out_.push_back(bit);
  for (; pending_ > 0; --pending_) out_.push_back(!bit);
}

void ArithmeticEncoder::encode(bool bit, AdaptiveBitModel& model) {
  const std::uint64_t split = split_point(low_, high_, model);
  if (bit) {
    low_ = split;
  } else {
    high_ = split - 1;
  }
  for (;;) {
    if (high_ < kHalf) {
      emit(false);
    } else if (low_ >= kHalf) {
      emit(true);
      low_ -= kHalf;
      high_ -= kHalf;
    } else if (low_ >= kQuarter && high_ < kThreeQuarters) {
      ++pending_;
      low_ -= kQuarter;
      high_ -= kQuarter;
    } else {
      break;
    }
    low_ = 2 * low_;
    high_ = 2 * high_ + 1;
  }
  model.update(bit);
}

BitStream ArithmeticEncoder::finish() {
  ++pending_;
  emit(low_ >= kQuarter);
  return std::move(out_);
}

ArithmeticDecoder::ArithmeticDecoder(const BitStream& body) : body_(body) {
  for (int i = 0; i < 32; ++i) value_ = (value_ << 1) | (next_bit() ? 1u : 0u);
}

bool ArithmeticDecoder::next_bit() {
  const bool bit = consumed_ < body_.size() && body_[consumed_];
  ++consumed_;
  return bit;
}

bool ArithmeticDecoder::decode(AdaptiveBitModel& model) {
  const std::uint64_t split = split_point(low_, high_, model);
  const bool bit = value_ >= split;
  if (bit) {
    low_ = split;
  } else {
    high_ = split - 1;
  }
  for (;;) {
    if (high_ < kHalf) {
      // nothing to subtract
    } else if (low_ >= kHalf) {
      low_ -= kHalf;
      high_ -= kHalf;
      value_ -= kHalf;
    } else if (low_ >= kQuarter && high_ < kThreeQuarters) {
      low_ -= kQuarter;
      high_ -= kQuarter;
      value_ -= kQuarter;
    } else {
      break;
    }
    low_ = 2 * low_;
    high_ = 2 * high_ + 1;
    value_ = 2 * value_ + (next_bit() ? 1u : 0u);
  }
  model.update(bit);
  return bit;
}

}  // namespace rdh
