#pragma once

#include <cstdint>
#include <string>

#include "tiltlab/errors.hpp"

namespace tiltlab::detail {

inline std::int64_t add(std::int64_t a, std::int64_t b, const std::string& where) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow at " + where);
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b, const std::string& where) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow at " + where);
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b, const std::string& where) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow at " + where);
  return r;
}

}  // namespace tiltlab::detail
