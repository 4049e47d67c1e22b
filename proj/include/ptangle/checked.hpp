#pragma once

#include <stdexcept>
#include <type_traits>

namespace ptangle {

// Integer arithmetic that throws instead of wrapping.
template <typename T>
T checked_add(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
  } else {
    return a + b;
  }
}

template <typename T>
T checked_sub(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
  } else {
    return a - b;
  }
}

template <typename T>
T checked_mul(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
  } else {
    return a * b;
  }
}

template <typename T>
T checked_neg(T a) {
  return checked_sub(T(0), a);
}

}  // namespace ptangle
