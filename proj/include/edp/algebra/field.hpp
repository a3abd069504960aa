#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "edp/algebra/integer.hpp"

namespace edp {

// Element of a field that knows its own field. Constants are made through an
// existing element (`from_int`) so prime-field elements keep their modulus.
template <class F>
concept FieldElement = std::copy_constructible<F> && std::equality_comparable<F> &&
                       requires(const F a, const F b, const Int& n) {
                         { a + b } -> std::same_as<F>;
                         { a - b } -> std::same_as<F>;
                         { a * b } -> std::same_as<F>;
                         { a / b } -> std::same_as<F>;
                         { -a } -> std::same_as<F>;
                         { a.is_zero() } -> std::same_as<bool>;
                         { a.from_int(n) } -> std::same_as<F>;
                         { a.inverse() } -> std::same_as<F>;
                         { a.to_string() } -> std::same_as<std::string>;
                       };

template <FieldElement F>
F power(const F& base, std::uint64_t exponent) {
  F result = base.from_int(1);
  F square = base;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result = result * square;
    exponent >>= 1U;
    if (exponent != 0) square = square * square;
  }
  return result;
}

template <FieldElement F>
F from_int(const F& like, long value) {
  return like.from_int(Int(value));
}

}  // namespace edp
