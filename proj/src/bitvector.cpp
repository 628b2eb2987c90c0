#include "repfn/bitvector.hpp"

#include <bit>

namespace repfn {

BitVector::BitVector(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  clear_tail();
}

void BitVector::clear_tail() noexcept {
  const std::size_t rem = size_ & 63;
  if (rem != 0) {
    words_.back() &= (std::uint64_t{1} << rem) - 1;
  }
}

std::uint64_t BitVector::window(std::int64_t start) const noexcept {
  const auto nwords = static_cast<std::int64_t>(words_.size());
  auto word_at = [&](std::int64_t w) -> std::uint64_t {
    return (w >= 0 && w < nwords) ? words_[static_cast<std::size_t>(w)] : 0;
  };
  // Floor division so that negative starts pick the word below zero.
  const std::int64_t w = start >= 0 ? start / 64 : -((-start + 63) / 64);
  const auto shift = static_cast<unsigned>(start - w * 64);
  const std::uint64_t lo = word_at(w);
  if (shift == 0) {
    return lo;
  }
  return (lo >> shift) | (word_at(w + 1) << (64 - shift));
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (const std::uint64_t w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

BitVector BitVector::operator~() const {
  BitVector out = *this;
  for (std::uint64_t& w : out.words_) {
    w = ~w;
  }
  out.clear_tail();
  return out;
}

std::vector<std::uint64_t> BitVector::elements() const {
  std::vector<std::uint64_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace repfn
