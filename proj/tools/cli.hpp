#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "repfn/sets.hpp"

namespace repfn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Accepts "A0", "B0", a spec "N=..;P=.." with an optional "(unchecked)"
// suffix, "thm1:<N>", "thm2:<k>", "thm3:<N>", "cor3:<k>" or
// "random:<N>" (drawn with `seed`).
SarkozySet resolve_set(const std::string& text, std::uint64_t seed = 0);

// Entry point for the repfn tool. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace repfn::cli
