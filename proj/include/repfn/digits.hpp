#pragma once

// Binary digit sums and the Thue-Morse partition of the nonnegative integers.
//
//   A0 = { a : popcount(a) even }   (evil numbers)
//   B0 = { a : popcount(a) odd  }   (odious numbers)

#include <bit>
#include <cstdint>
#include <vector>

namespace repfn {

enum class DigitParity : std::uint8_t { Even = 0, Odd = 1 };

constexpr unsigned digit_sum(std::uint64_t a) noexcept {
  return static_cast<unsigned>(std::popcount(a));
}

constexpr DigitParity parity(std::uint64_t a) noexcept {
  return static_cast<DigitParity>(std::popcount(a) & 1);
}

constexpr bool parity_bit(std::uint64_t a) noexcept {
  return (std::popcount(a) & 1) != 0;
}

constexpr bool in_a0(std::uint64_t a) noexcept { return !parity_bit(a); }
constexpr bool in_b0(std::uint64_t a) noexcept { return parity_bit(a); }

// Ascending members of A0 (resp. B0) in [0, limit].
std::vector<std::uint64_t> enumerate_a0(std::uint64_t limit);
std::vector<std::uint64_t> enumerate_b0(std::uint64_t limit);

}  // namespace repfn
