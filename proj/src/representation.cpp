#include "repfn/representation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

namespace repfn {
namespace {

void require_cover(const BitVector& v, std::uint64_t n, const char* what) {
  if (v.size() <= n) {
    throw std::invalid_argument(std::string(what) + ": indicator of length " +
                                std::to_string(v.size()) +
                                " does not cover n=" + std::to_string(n));
  }
}

// Counts a in [0, count) with a_bits[a] and b_bits[n - a].
std::uint64_t anti_diagonal_count(const BitVector& a_bits,
                                  const BitVector& b_bits, std::uint64_t n,
                                  std::uint64_t count) {
  std::uint64_t total = 0;
  const auto sn = static_cast<std::int64_t>(n);
  for (std::uint64_t base = 0; base < count; base += 64) {
    std::uint64_t word = a_bits.window(static_cast<std::int64_t>(base)) &
                         reverse_bits(b_bits.window(
                             sn - static_cast<std::int64_t>(base) - 63));
    const std::uint64_t left = count - base;
    if (left < 64) {
      word &= (std::uint64_t{1} << left) - 1;
    }
    total += static_cast<std::uint64_t>(std::popcount(word));
  }
  return total;
}

// Runs body(lo, hi) over [0, n_max] split into contiguous chunks. The
// quadratic methods cost grows with n, so chunks are balanced by area.
void parallel_over_n(std::uint64_t n_max, unsigned workers,
                     const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  if (workers <= 1 || n_max < 1024) {
    body(0, n_max + 1);
    return;
  }
  std::vector<std::uint64_t> cuts{0};
  const double total = static_cast<double>(n_max + 1);
  for (unsigned w = 1; w < workers; ++w) {
    const double frac = static_cast<double>(w) / workers;
    cuts.push_back(static_cast<std::uint64_t>(total * std::sqrt(frac)));
  }
  cuts.push_back(n_max + 1);
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    if (cuts[w] < cuts[w + 1]) {
      threads.emplace_back(body, cuts[w], cuts[w + 1]);
    }
  }
}

// --- number-theoretic transform ------------------------------------------

constexpr std::uint64_t kMod = 998244353;  // 119 * 2^23 + 1
constexpr std::uint64_t kRoot = 3;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kMod;
  while (exp != 0) {
    if ((exp & 1) != 0) {
      result = result * base % kMod;
    }
    base = base * base % kMod;
    exp >>= 1;
  }
  return result;
}

void ntt(std::vector<std::uint64_t>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; (j & bit) != 0; bit >>= 1) {
      j ^= bit;
    }
    j ^= bit;
    if (i < j) {
      std::swap(a[i], a[j]);
    }
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w_len = pow_mod(kRoot, (kMod - 1) / len);
    if (inverse) {
      w_len = pow_mod(w_len, kMod - 2);
    }
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t w = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::uint64_t u = a[i + j];
        const std::uint64_t v = a[i + j + len / 2] * w % kMod;
        a[i + j] = u + v < kMod ? u + v : u + v - kMod;
        a[i + j + len / 2] = u >= v ? u - v : u + kMod - v;
        w = w * w_len % kMod;
      }
    }
  }
  if (inverse) {
    const std::uint64_t n_inv = pow_mod(n, kMod - 2);
    for (std::uint64_t& x : a) {
      x = x * n_inv % kMod;
    }
  }
}

std::vector<std::uint32_t> to_digits(const BitVector& v, std::uint64_t n_max) {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n_max) + 1);
  for (std::uint64_t i = 0; i <= n_max; ++i) {
    out[i] = v.test(i) ? 1 : 0;
  }
  return out;
}

}  // namespace

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::NaiveOracle:
      return "naive";
    case Method::BitParallel:
      return "bitpar";
    case Method::Convolution:
      return "conv";
  }
  return "?";
}

std::uint64_t r2_naive(const BitVector& indicator, std::uint64_t n) {
  require_cover(indicator, n, "r2_naive");
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < n - a; ++a) {
    if (indicator.test(a) && indicator.test(n - a)) {
      ++count;
    }
  }
  return count;
}

std::uint64_t cross_naive(const BitVector& a, const BitVector& b,
                          std::uint64_t n) {
  require_cover(a, n, "cross_naive");
  require_cover(b, n, "cross_naive");
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x <= n; ++x) {
    if (a.test(x) && b.test(n - x)) {
      ++count;
    }
  }
  return count;
}

std::uint64_t r2_at(const BitVector& indicator, std::uint64_t n) {
  require_cover(indicator, n, "r2_at");
  return anti_diagonal_count(indicator, indicator, n, (n + 1) / 2);
}

std::uint64_t cross_at(const BitVector& a, const BitVector& b,
                       std::uint64_t n) {
  require_cover(a, n, "cross_at");
  require_cover(b, n, "cross_at");
  return anti_diagonal_count(a, b, n, n + 1);
}

std::vector<std::uint64_t> convolve_exact(std::span<const std::uint32_t> a,
                                          std::span<const std::uint32_t> b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  if (std::min(a.size(), b.size()) >= kMod) {
    throw std::invalid_argument("convolve_exact: input too long for exact NTT");
  }
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t size = std::bit_ceil(out_len);
  if (size > (std::size_t{1} << 23)) {
    throw std::invalid_argument("convolve_exact: transform length exceeds 2^23");
  }
  std::vector<std::uint64_t> fa(size, 0);
  std::vector<std::uint64_t> fb(size, 0);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  ntt(fa, false);
  ntt(fb, false);
  for (std::size_t i = 0; i < size; ++i) {
    fa[i] = fa[i] * fb[i] % kMod;
  }
  ntt(fa, true);
  fa.resize(out_len);
  return fa;
}

RepProfile r2_profile(const BitVector& indicator, std::uint64_t n_max,
                      Method method, unsigned workers) {
  require_cover(indicator, n_max, "r2_profile");
  RepProfile profile{n_max, std::vector<std::uint64_t>(n_max + 1, 0), method};
  auto& r2 = profile.r2;
  switch (method) {
    case Method::NaiveOracle:
      parallel_over_n(n_max, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t n = lo; n < hi; ++n) {
          r2[n] = r2_naive(indicator, n);
        }
      });
      break;
    case Method::BitParallel:
      parallel_over_n(n_max, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t n = lo; n < hi; ++n) {
          r2[n] = anti_diagonal_count(indicator, indicator, n, (n + 1) / 2);
        }
      });
      break;
    case Method::Convolution: {
      const auto digits = to_digits(indicator, n_max);
      const auto ordered = convolve_exact(digits, digits);
      for (std::uint64_t n = 0; n <= n_max; ++n) {
        const std::uint64_t diagonal =
            (n % 2 == 0 && indicator.test(n / 2)) ? 1 : 0;
        r2[n] = (ordered[n] - diagonal) / 2;
      }
      break;
    }
  }
  return profile;
}

CrossProfile cross_profile(const BitVector& a, const BitVector& b,
                           std::uint64_t n_max, Method method,
                           unsigned workers) {
  require_cover(a, n_max, "cross_profile");
  require_cover(b, n_max, "cross_profile");
  CrossProfile profile{n_max, std::vector<std::uint64_t>(n_max + 1, 0)};
  auto& rab = profile.rab;
  switch (method) {
    case Method::NaiveOracle:
      parallel_over_n(n_max, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t n = lo; n < hi; ++n) {
          rab[n] = cross_naive(a, b, n);
        }
      });
      break;
    case Method::BitParallel:
      parallel_over_n(n_max, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t n = lo; n < hi; ++n) {
          rab[n] = anti_diagonal_count(a, b, n, n + 1);
        }
      });
      break;
    case Method::Convolution: {
      const auto ordered = convolve_exact(to_digits(a, n_max), to_digits(b, n_max));
      std::copy_n(ordered.begin(), n_max + 1, rab.begin());
      break;
    }
  }
  return profile;
}

void write_repfn_csv(std::ostream& out, const RepProfile& a,
                     const RepProfile& comp, const CrossProfile& cross) {
  if (a.n_max != comp.n_max || a.n_max != cross.n_max) {
    throw std::invalid_argument("write_repfn_csv: profiles differ in n_max");
  }
  out << "n,r2_A,r2_comp,r_cross\n";
  for (std::uint64_t n = 0; n <= a.n_max; ++n) {
    out << n << ',' << a.r2[n] << ',' << comp.r2[n] << ',' << cross.rab[n]
        << '\n';
  }
}

}  // namespace repfn
