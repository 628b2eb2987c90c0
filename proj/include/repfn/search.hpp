#pragma once

// Exhaustive scans over every balanced prefix of a small threshold N.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "repfn/sets.hpp"

namespace repfn {

inline constexpr std::uint64_t kMaxScanThreshold = 10;

// A scanned prefix contradicts one of the checked theorems. Always an
// implementation defect.
class ScanContradiction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Number of balanced prefixes, C(2N, N).
std::uint64_t balanced_prefix_count(std::uint64_t n);

// All N-element subsets of [0, 2N-1] in lexicographic order of their
// sorted element lists.
class BalancedPrefixes {
 public:
  explicit BalancedPrefixes(std::uint64_t n);

  // Next prefix, or nullopt once the stream is exhausted.
  std::optional<SetSpec> next();

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> current_;
  bool done_ = false;
  bool started_ = false;
};

std::vector<SetSpec> enumerate_balanced_prefixes(std::uint64_t n);

struct SearchRecord {
  SetSpec spec;
  ThueMorseLike tm_like = ThueMorseLike::Neither;
  std::optional<std::uint64_t> last_zero;     // largest n <= n_max with R2 = 0
  std::optional<std::uint64_t> min_f_margin;  // min R2(n) over n >= 14(N-1)
  std::int64_t min_e_slack_num = 0;           // min (56N-52)(R2+1) - (n+3), n >= 1
  std::vector<std::uint64_t> zeros;           // every n <= n_max with R2 = 0
};

struct ScanOptions {
  unsigned workers = 1;
  // Upper bound on bytes of in-flight profiles; sizes the work chunks.
  std::uint64_t max_memory_bytes = std::uint64_t{256} << 20;
};

struct ScanSummary {
  std::uint64_t n = 0;
  std::uint64_t n_max = 0;
  std::uint64_t records = 0;
  std::uint64_t f_threshold = 0;  // 14(N-1)
  // Largest last_zero among prefixes that are neither A0 nor B0.
  std::optional<std::uint64_t> max_neither_last_zero;
};

// Streams one record per balanced prefix, in enumeration order regardless
// of the worker count. Every record is checked against Theorem A
// equivalence, the Theorem E bound (when A meets A0 and B0 infinitely)
// and Theorem F (when A is neither A0 nor B0); a contradiction throws
// ScanContradiction. Requires N <= 10 and n_max >= 14(N-1).
ScanSummary scan_stream(std::uint64_t n, std::uint64_t n_max,
                        const ScanOptions& options,
                        const std::function<void(const SearchRecord&)>& sink);

std::vector<SearchRecord> scan(std::uint64_t n, std::uint64_t n_max,
                               const ScanOptions& options = {});

// max(200, 20N)
std::uint64_t default_scan_horizon(std::uint64_t n);

// Header "spec,tm_like,last_zero,min_F_margin,min_E_slack_num"; the spec
// field is double-quoted and absent optionals are empty fields.
void write_scan_csv_header(std::ostream& out);
void write_scan_csv_row(std::ostream& out, const SearchRecord& record);

}  // namespace repfn
