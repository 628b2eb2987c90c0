#pragma once

// Sets A of nonnegative integers that are fixed by a prefix on [0, 2N-1]
// together with the doubling rule
//
//   2m in A  <=>  m in A,      2m+1 in A  <=>  m not in A      (m >= N).
//
// These are exactly the sets with R2(A, n) = R2(N \ A, n) for n >= 2N-1
// once the prefix holds N elements ("balanced").

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "repfn/bitvector.hpp"

namespace repfn {

// Largest supported prefix length 2N.
inline constexpr std::uint64_t kMaxPrefixLength = std::uint64_t{1} << 30;

// Textual form of a prefix: N together with A ∩ [0, 2N-1].
struct SetSpec {
  std::uint64_t n = 1;
  std::vector<std::uint64_t> elements;

  bool operator==(const SetSpec&) const = default;
};

// Grammar: "N=<int>;P=<int>(,<int>)*", whitespace allowed around tokens.
// Elements are sorted on parse; duplicates and values above 2N-1 are errors.
SetSpec parse_spec(std::string_view text);
std::string format_spec(const SetSpec& spec);

enum class ThueMorseLike { IsA0, IsB0, Neither };
enum class ThueMorseClass { A0, B0 };

const char* to_string(ThueMorseLike t) noexcept;

class SarkozySet {
 public:
  // Throws std::invalid_argument on out-of-range or duplicate elements and
  // on prefixes whose size differs from N.
  static SarkozySet make(const SetSpec& spec);
  // Same validation except for the balance requirement. For negative tests.
  static SarkozySet make_unchecked(const SetSpec& spec);
  static SarkozySet from_prefix(BitVector prefix, bool unchecked = false);

  static SarkozySet a0() { return make({1, {0}}); }
  static SarkozySet b0() { return make({1, {1}}); }

  std::uint64_t threshold() const noexcept { return n_; }
  const BitVector& prefix() const noexcept { return prefix_; }
  bool balanced() const noexcept { return prefix_.count() == n_; }

  // Closed form: x = 2^l k + i with N <= k <= 2N-1, 0 <= i < 2^l, so
  // x in A iff (k in A) xor (popcount(i) odd).
  bool contains(std::uint64_t x) const noexcept;

  // Indicator of A ∩ [0, limit] built by a single forward pass of the
  // doubling rule. Independent of contains().
  BitVector enumerate(std::uint64_t limit) const;

  SarkozySet complement() const;
  SetSpec spec() const;

  bool operator==(const SarkozySet&) const = default;

 private:
  SarkozySet(std::uint64_t n, BitVector prefix)
      : n_(n), prefix_(std::move(prefix)) {}

  std::uint64_t n_;
  BitVector prefix_;
};

ThueMorseLike is_thue_morse_like(const SarkozySet& s);

// Decides whether A ∩ A0 (resp. A ∩ B0) is infinite.
//
// On the block of k in [N, 2N-1], x = 2^l k + i lies in A iff
// [k in A] xor par(i), and in A0 iff par(k) == par(i). So the block
// agrees with A0 everywhere when [k in A] == [k in A0] and with B0
// everywhere otherwise; each block is infinite and half-full.
bool intersects_infinitely(const SarkozySet& s, ThueMorseClass which);

// Uniformly chosen balanced prefix with threshold n, reproducible from seed
// on every platform (mt19937_64 output only, no library distributions).
SarkozySet random_balanced_set(std::uint64_t n, std::uint64_t seed);

}  // namespace repfn
