#include "repfn/digits.hpp"

namespace repfn {
namespace {

std::vector<std::uint64_t> enumerate_parity(std::uint64_t limit, bool odd) {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(limit / 2 + 1));
  for (std::uint64_t a = 0;; ++a) {
    if (parity_bit(a) == odd) {
      out.push_back(a);
    }
    if (a == limit) {
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> enumerate_a0(std::uint64_t limit) {
  return enumerate_parity(limit, false);
}

std::vector<std::uint64_t> enumerate_b0(std::uint64_t limit) {
  return enumerate_parity(limit, true);
}

}  // namespace repfn
