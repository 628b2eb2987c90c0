#pragma once

// Representation functions over a finite horizon.
//
//   R2(A, n)     = #{ (a, a') : a + a' = n, a < a', a, a' in A }
//   R_{A,B}(n)   = #{ (a, b)  : a + b  = n, a in A, b in B }     (ordered)

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "repfn/bitvector.hpp"

namespace repfn {

enum class Method { NaiveOracle, BitParallel, Convolution };

const char* to_string(Method m) noexcept;

struct RepProfile {
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> r2;
  Method method = Method::BitParallel;
};

struct CrossProfile {
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> rab;
};

// Anything that can materialize its indicator on [0, limit].
template <typename S>
concept IntegerSet = requires(const S& s, std::uint64_t limit) {
  { s.enumerate(limit) } -> std::convertible_to<BitVector>;
};

// Ground truth: direct loop over a < n - a. Throws std::invalid_argument
// if the indicator does not cover [0, n].
std::uint64_t r2_naive(const BitVector& indicator, std::uint64_t n);
std::uint64_t cross_naive(const BitVector& a, const BitVector& b,
                          std::uint64_t n);

// Word-parallel count of R2(A, n) at a single n: the low half of the
// indicator ANDed with the bit-reversed window ending at n.
std::uint64_t r2_at(const BitVector& indicator, std::uint64_t n);
std::uint64_t cross_at(const BitVector& a, const BitVector& b,
                       std::uint64_t n);

// Exact acyclic convolution of 0/1 sequences via a number-theoretic
// transform modulo 998244353. Every output coefficient must stay below
// the modulus, which holds when the shorter input has fewer than
// 998244353 entries.
std::vector<std::uint64_t> convolve_exact(std::span<const std::uint32_t> a,
                                          std::span<const std::uint32_t> b);

// Profiles over [0, n_max]. `workers` > 1 splits the n range across
// threads for the naive and bit-parallel methods.
RepProfile r2_profile(const BitVector& indicator, std::uint64_t n_max,
                      Method method = Method::BitParallel,
                      unsigned workers = 1);
CrossProfile cross_profile(const BitVector& a, const BitVector& b,
                           std::uint64_t n_max,
                           Method method = Method::BitParallel,
                           unsigned workers = 1);

template <IntegerSet S>
RepProfile r2_profile(const S& s, std::uint64_t n_max,
                      Method method = Method::BitParallel,
                      unsigned workers = 1) {
  return r2_profile(s.enumerate(n_max), n_max, method, workers);
}

template <IntegerSet SA, IntegerSet SB>
CrossProfile cross_profile(const SA& a, const SB& b, std::uint64_t n_max,
                           Method method = Method::BitParallel,
                           unsigned workers = 1) {
  return cross_profile(a.enumerate(n_max), b.enumerate(n_max), n_max, method,
                       workers);
}

// CSV with header "n,r2_A,r2_comp,r_cross"; all three inputs must share
// n_max.
void write_repfn_csv(std::ostream& out, const RepProfile& a,
                     const RepProfile& comp, const CrossProfile& cross);

}  // namespace repfn
