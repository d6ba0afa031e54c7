#pragma once

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ivt {

// Arbitrary-precision natural number. Values are never negative.
using Natural = boost::multiprecision::cpp_int;

template <class N>
concept BitNatural = std::same_as<N, std::uint64_t> || std::same_as<N, Natural>;

// Decimal digits only; throws std::invalid_argument otherwise.
Natural parse_natural(std::string_view text);

std::string to_string(const Natural &value);

inline std::size_t bit_length(std::uint64_t value) noexcept {
  return static_cast<std::size_t>(std::bit_width(value));
}

inline std::size_t bit_length(const Natural &value) {
  return value == 0 ? 0 : static_cast<std::size_t>(msb(value)) + 1;
}

// 2^width - 1.
template <BitNatural N> N low_mask(std::size_t width) {
  if constexpr (std::same_as<N, std::uint64_t>) {
    return width >= 64 ? ~std::uint64_t{0}
                       : (std::uint64_t{1} << width) - 1;
  } else {
    return (Natural(1) << width) - 1;
  }
}

// True for 2^s - 1 with s >= 1.
template <BitNatural N> bool is_all_ones(const N &value) {
  return value != 0 && (value & (value + 1)) == 0;
}

// Complement of value inside a field of `width` bits.
template <BitNatural N> N complement(const N &value, std::size_t width) {
  return low_mask<N>(width) ^ value;
}

} // namespace ivt
