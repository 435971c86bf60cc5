#pragma once

#include <optional>

#include "rdh/error.hpp"

namespace rdh::test {

template <typename F>
std::optional<Errc> error_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace rdh::test
