#pragma once

// Finite-horizon checkers for the identities and bounds satisfied by
// SarkozySets. All inequality checks are exact integer comparisons; only
// empirical_density() touches floating point.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "repfn/sets.hpp"

namespace repfn {

enum class TheoremId {
  ThmA,         // R2(A, n) = R2(N \ A, n) for n >= 2N-1
  Dombi,        // R2(A0, n) = R2(B0, n) for n >= 0
  Lemma1,       // k in A <=> 2^l k + i in A, flipped by par(i)
  Thm1,         // R2(A, 2^(2m+1)-1) <= 2^(2m+1) / (4 * 2^floor(log2(N-1)))
  Thm2,         // R2(C_k, 14*4^k - 1) = 0
  Thm3,         // R2(A, 3N-1) = 0
  ThmB,         // R2(A, n) >= n / (40N(N+1)) - 1
  ThmE,         // R2(A, n) >= (n+3) / (56N-52) - 1
  ThmE_Cross,   // R_{A, N\A}(n) >= (n+3) / (28N-26) - 1
  ThmF,         // R2(A, n) >= 1 for n >= 14(N-1) when A != A0, B0
  ThmD_density, // empirical fraction of n with |R2 - n/8| <= C n^(1-theta)
  Cor3,         // Thm1 bound for N = 2^k + 1
};

const char* to_string(TheoremId id) noexcept;

// Exact bound slack num/den with den > 0; negative means violated.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const Rational&) const = default;
};

struct BoundReport {
  TheoremId theorem = TheoremId::ThmA;
  SetSpec set;
  std::pair<std::uint64_t, std::uint64_t> n_range{0, 0};
  bool passed = true;
  std::optional<std::uint64_t> worst_n;
  std::optional<Rational> worst_margin;
};

// passed iff R2(A) and R2(N \ A) agree on [2N-1, n_max]. For an unbalanced
// prefix the report carries the first disagreement as worst_n.
BoundReport check_theorem_a(const SarkozySet& s, std::uint64_t n_max,
                            unsigned workers = 1);

BoundReport check_dombi(std::uint64_t n_max, unsigned workers = 1);

// Both clauses for N <= k <= k_max, l <= l_max, i < 2^l, evaluated on the
// recurrence-built indicator. n_range holds [N, k_max].
BoundReport check_lemma1(const SarkozySet& s, std::uint64_t k_max,
                         unsigned l_max);

// Upper bound along n = 2^(2m+1) - 1 for every m with 4^m > N-1 and
// m <= m_max. `s` must come from thm1_set (or cor3_set with id Cor3).
BoundReport check_thm1_upper(const SarkozySet& s, unsigned m_max,
                             TheoremId id = TheoremId::Thm1);
BoundReport check_cor3_upper(std::uint64_t k, unsigned m_max);

// Zero of R2 at 14*4^k - 1 plus Theorem A equivalence up to n_max.
BoundReport check_thm2_zero(std::uint64_t k, std::uint64_t n_max = 10000);
// Zero of R2 at 3N - 1 plus Theorem A equivalence up to n_max.
BoundReport check_thm3_zero(std::uint64_t n, std::uint64_t n_max = 10000);

// ThmE, ThmE_Cross and ThmB when A meets both A0 and B0 infinitely often
// (and N >= 2); ThmF when A is neither A0 nor B0. Inapplicable checks are
// omitted from the result. Throws on an unbalanced set.
std::vector<BoundReport> check_lower_bounds(const SarkozySet& s,
                                            std::uint64_t n_max,
                                            unsigned workers = 1);

// Upper end of the admissible theta range, (2 log 2 - log 3) / (42 log 2 - 9 log 3).
long double theta_limit() noexcept;

struct DensityReport {
  std::uint64_t n_max = 0;
  double theta = 0;
  double c = 1;
  std::uint64_t qualifying = 0;  // n in [1, n_max]
  std::uint64_t hits = 0;
  double density = 1;
  // histogram[j] counts n with floor(64 R2(A,n) / n) = j, j in [0, 64].
  std::vector<std::uint64_t> histogram;
};

// Requires 0 < theta < theta_limit() and c >= 0. The threshold
// c * n^(1-theta) is rounded upward, so rounding never produces a miss.
DensityReport empirical_density(const SarkozySet& s, std::uint64_t n_max,
                                double theta, double c = 1.0,
                                unsigned workers = 1);

struct RatioSequence {
  enum class Kind { OddPowerOfTwoMinusOne, Arithmetic };
  Kind kind = Kind::OddPowerOfTwoMinusOne;
  std::uint64_t step = 1;
};

struct RatioPoint {
  std::uint64_t n = 0;
  std::uint64_t r2 = 0;
  double ratio = 0;
};

// n_j = 2^(2j+1) - 1 for j = 0..count-1, or n_j = step * (j+1).
std::vector<RatioPoint> ratio_sequence(const SarkozySet& s, RatioSequence seq,
                                       std::uint64_t count);

// Header "theorem_id,set_spec,n_lo,n_hi,passed,worst_n,worst_margin_num,worst_margin_den".
// The set spec is double-quoted since it contains commas.
void write_report_csv_header(std::ostream& out);
void write_report_csv_row(std::ostream& out, const BoundReport& report);

}  // namespace repfn
