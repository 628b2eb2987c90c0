#include "repfn/constructions.hpp"

#include <stdexcept>
#include <string>

#include "repfn/digits.hpp"

namespace repfn {

SarkozySet thm1_set(std::uint64_t n) {
  if (n < 2) {
    throw std::invalid_argument("thm1_set: N must be at least 2, got " +
                                std::to_string(n));
  }
  SetSpec spec{n, {}};
  for (std::uint64_t a = 2; a + 3 <= 2 * n; ++a) {
    if (in_a0(a)) {
      spec.elements.push_back(a);
    }
  }
  spec.elements.push_back(2 * n - 2);
  spec.elements.push_back(2 * n - 1);
  return SarkozySet::make(spec);
}

std::uint64_t thm2_threshold(std::uint64_t k) {
  if (k > 12) {
    throw std::invalid_argument("thm2_set: k=" + std::to_string(k) +
                                " exceeds the prefix limit (k <= 12)");
  }
  return std::uint64_t{3} << (2 * k);
}

SarkozySet thm2_set(std::uint64_t k) {
  const std::uint64_t target = thm2_threshold(k);
  BitVector prefix(6);
  prefix.set(0);
  prefix.set(3);
  prefix.set(4);
  for (std::uint64_t n = 3; n < target; n *= 4) {
    BitVector next(static_cast<std::size_t>(8 * n));
    for (std::uint64_t c = 0; c < 2 * n; ++c) {
      if (prefix.test(c)) {
        next.set(4 * c);
        next.set(4 * c + 3);
      } else {
        next.set(4 * c + 1);
        next.set(4 * c + 2);
      }
    }
    prefix = std::move(next);
  }
  return SarkozySet::from_prefix(std::move(prefix));
}

SarkozySet thm3_set(std::uint64_t n) {
  if (n < 3) {
    throw std::invalid_argument("thm3_set: N must be at least 3, got " +
                                std::to_string(n));
  }
  SetSpec spec{n, {}};
  const std::uint64_t first = n % 2 == 1 ? 1 : 0;
  for (std::uint64_t a = first; a + 2 <= n; a += 2) {
    spec.elements.push_back(a);
  }
  const std::uint64_t last = n % 2 == 1 ? (3 * n - 1) / 2 : 3 * n / 2 - 1;
  for (std::uint64_t a = n; a <= last; ++a) {
    spec.elements.push_back(a);
  }
  return SarkozySet::make(spec);
}

SarkozySet cor3_set(std::uint64_t k) {
  if (k > 28) {
    throw std::invalid_argument("cor3_set: k=" + std::to_string(k) +
                                " exceeds the prefix limit (k <= 28)");
  }
  return thm1_set((std::uint64_t{1} << k) + 1);
}

}  // namespace repfn
