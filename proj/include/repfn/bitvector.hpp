#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace repfn {

// Dense indicator vector of a finite set of nonnegative integers.
// Bits past size() inside the last word are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t pos) const noexcept {
    return (words_[pos >> 6] >> (pos & 63)) & 1U;
  }
  void set(std::size_t pos, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (pos & 63);
    if (value) {
      words_[pos >> 6] |= mask;
    } else {
      words_[pos >> 6] &= ~mask;
    }
  }

  // 64 bits starting at bit `start` (which may be negative); bit j of the
  // result is bit start+j of the vector, zero outside [0, size()).
  std::uint64_t window(std::int64_t start) const noexcept;

  std::size_t count() const noexcept;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  BitVector operator~() const;
  bool operator==(const BitVector& other) const = default;

  // Positions of the set bits, ascending.
  std::vector<std::uint64_t> elements() const;

 private:
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Reverses the bit order of a 64-bit word.
constexpr std::uint64_t reverse_bits(std::uint64_t x) noexcept {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
  return (x >> 32) | (x << 32);
}

}  // namespace repfn
