#pragma once

// Brute-force reference implementations used only by the tests. None of
// these share code with the library paths they check.

#include <cstdint>
#include <set>
#include <vector>

namespace repfn::oracle {

inline unsigned ones(std::uint64_t a) {
  unsigned d = 0;
  while (a != 0) {
    d += static_cast<unsigned>(a % 2);
    a /= 2;
  }
  return d;
}

inline bool evil(std::uint64_t a) { return ones(a) % 2 == 0; }

// Membership straight from the doubling rule, by recursion.
inline bool member(const std::set<std::uint64_t>& prefix, std::uint64_t n,
                   std::uint64_t x) {
  if (x < 2 * n) {
    return prefix.count(x) != 0;
  }
  return x % 2 == 0 ? member(prefix, n, x / 2) : !member(prefix, n, x / 2);
}

inline std::vector<bool> indicator(const std::set<std::uint64_t>& prefix,
                                   std::uint64_t n, std::uint64_t limit) {
  std::vector<bool> out(limit + 1);
  for (std::uint64_t x = 0; x <= limit; ++x) {
    out[x] = member(prefix, n, x);
  }
  return out;
}

// Unordered pairs a < a' with a + a' = n, by scanning both coordinates.
inline std::uint64_t r2(const std::vector<bool>& ind, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a <= n; ++a) {
    for (std::uint64_t b = a + 1; b <= n; ++b) {
      if (a + b == n && ind[a] && ind[b]) {
        ++count;
      }
    }
  }
  return count;
}

inline std::uint64_t cross(const std::vector<bool>& a,
                           const std::vector<bool>& b, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x <= n; ++x) {
    if (a[x] && b[n - x]) {
      ++count;
    }
  }
  return count;
}

// C_k by its defining recursion over C_{k-1}, bottoming out at C_0.
inline bool thm2_member(std::uint64_t k, std::uint64_t x) {
  if (k == 0) {
    return member({0, 3, 4}, 3, x);
  }
  const std::uint64_t r = x % 4;
  const bool below = thm2_member(k - 1, x / 4);
  return (r == 0 || r == 3) ? below : !below;
}

}  // namespace repfn::oracle
