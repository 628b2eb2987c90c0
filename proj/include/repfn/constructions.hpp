#pragma once

// Explicit extremal sets. Each is returned as a balanced SarkozySet.

#include <cstdint>

#include "repfn/sets.hpp"

namespace repfn {

// Prefix (A0 ∩ [2, 2N-3]) ∪ {2N-2, 2N-1}; small values of R2 along
// n = 2^(2m+1) - 1. Requires N >= 2.
SarkozySet thm1_set(std::uint64_t n);

// C_k with threshold N_k = 3 * 4^k. C_0 ∩ [0,5] = {0,3,4}, and
// C_k = (4 C_{k-1} + {0,3}) ∪ (4 (N \ C_{k-1}) + {1,2}).
// R2(C_k, 14 * 4^k - 1) = 0. Requires 2 N_k <= 2^30.
SarkozySet thm2_set(std::uint64_t k);
std::uint64_t thm2_threshold(std::uint64_t k);

// Odd N:  {1,3,...,N-2} ∪ {N, N+1, ..., (3N-1)/2}
// Even N: {0,2,...,N-2} ∪ {N, N+1, ..., 3N/2 - 1}
// R2(A, 3N-1) = 0. Requires N >= 3.
SarkozySet thm3_set(std::uint64_t n);

// thm1_set(2^k + 1).
SarkozySet cor3_set(std::uint64_t k);

}  // namespace repfn
