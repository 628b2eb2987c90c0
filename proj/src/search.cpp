#include "repfn/search.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "repfn/representation.hpp"

namespace repfn {
namespace {

void validate_scan_threshold(std::uint64_t n) {
  if (n == 0 || n > kMaxScanThreshold) {
    throw std::invalid_argument("scan: N must lie in [1, " +
                                std::to_string(kMaxScanThreshold) + "], got " +
                                std::to_string(n));
  }
}

SearchRecord analyse(const SetSpec& spec, std::uint64_t n_max) {
  const SarkozySet s = SarkozySet::make(spec);
  const std::uint64_t n = s.threshold();
  const BitVector members = s.enumerate(n_max);
  const auto r2 = r2_profile(members, n_max).r2;
  const auto r2_comp = r2_profile(s.complement(), n_max).r2;

  SearchRecord record{spec, is_thue_morse_like(s)};
  for (std::uint64_t m = 2 * n - 1; m <= n_max; ++m) {
    if (r2[m] != r2_comp[m]) {
      throw ScanContradiction("scan: Theorem A equivalence fails for " +
                             format_spec(spec) + " at n=" + std::to_string(m));
    }
  }

  const std::uint64_t f_lo = 14 * (n - 1);
  const auto e_den = static_cast<std::int64_t>(56 * n - 52);
  const bool meets_both = intersects_infinitely(s, ThueMorseClass::A0) &&
                          intersects_infinitely(s, ThueMorseClass::B0);
  bool first_e = true;
  for (std::uint64_t m = 0; m <= n_max; ++m) {
    if (r2[m] == 0) {
      record.zeros.push_back(m);
      record.last_zero = m;
    }
    if (m >= f_lo) {
      record.min_f_margin = std::min(record.min_f_margin.value_or(r2[m]), r2[m]);
    }
    if (m >= 1) {
      const std::int64_t slack = e_den * (static_cast<std::int64_t>(r2[m]) + 1) -
                                 static_cast<std::int64_t>(m + 3);
      record.min_e_slack_num = first_e ? slack : std::min(record.min_e_slack_num, slack);
      first_e = false;
    }
  }

  if (n >= 2 && meets_both && record.min_e_slack_num < 0) {
    throw ScanContradiction("scan: Theorem E bound fails for " + format_spec(spec));
  }
  if (n >= 2 && record.tm_like == ThueMorseLike::Neither &&
      record.min_f_margin.value_or(1) == 0) {
    throw ScanContradiction("scan: Theorem F fails for " + format_spec(spec));
  }
  return record;
}

}  // namespace

std::uint64_t balanced_prefix_count(std::uint64_t n) {
  // C(2n, n) built incrementally; exact at every step.
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    c = c * (n + i) / i;
  }
  return c;
}

BalancedPrefixes::BalancedPrefixes(std::uint64_t n) : n_(n) {
  validate_scan_threshold(n);
  current_.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    current_[i] = i;
  }
}

std::optional<SetSpec> BalancedPrefixes::next() {
  if (done_) {
    return std::nullopt;
  }
  if (started_) {
    // Rightmost position that can still advance: current_[i] < i + N.
    std::size_t i = current_.size();
    while (i > 0 && current_[i - 1] == (i - 1) + n_) {
      --i;
    }
    if (i == 0) {
      done_ = true;
      return std::nullopt;
    }
    ++current_[i - 1];
    for (std::size_t j = i; j < current_.size(); ++j) {
      current_[j] = current_[j - 1] + 1;
    }
  }
  started_ = true;
  return SetSpec{n_, current_};
}

std::vector<SetSpec> enumerate_balanced_prefixes(std::uint64_t n) {
  std::vector<SetSpec> out;
  BalancedPrefixes stream(n);
  while (auto spec = stream.next()) {
    out.push_back(std::move(*spec));
  }
  return out;
}

std::uint64_t default_scan_horizon(std::uint64_t n) {
  return std::max<std::uint64_t>(200, 20 * n);
}

ScanSummary scan_stream(std::uint64_t n, std::uint64_t n_max,
                        const ScanOptions& options,
                        const std::function<void(const SearchRecord&)>& sink) {
  validate_scan_threshold(n);
  if (n_max < 14 * (n - 1) || n_max < 2 * n - 1) {
    throw std::invalid_argument("scan: n_max must be at least 14(N-1) and 2N-1");
  }
  const unsigned workers = std::max(1U, options.workers);
  // Two profiles and one indicator live per prefix in flight.
  const std::uint64_t per_prefix = 3 * 8 * (n_max + 1) + 256;
  const std::uint64_t chunk = std::min<std::uint64_t>(
      4096, options.max_memory_bytes / per_prefix);
  if (chunk == 0) {
    throw std::length_error("scan: memory cap too small for a single prefix at n_max=" +
                            std::to_string(n_max));
  }

  ScanSummary summary{n, n_max, 0, 14 * (n - 1), std::nullopt};
  BalancedPrefixes stream(n);
  std::vector<SetSpec> batch;
  std::vector<SearchRecord> results;
  for (;;) {
    batch.clear();
    while (batch.size() < chunk) {
      auto spec = stream.next();
      if (!spec) {
        break;
      }
      batch.push_back(std::move(*spec));
    }
    if (batch.empty()) {
      break;
    }
    results.assign(batch.size(), SearchRecord{});
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
      try {
        for (std::size_t i = w; i < batch.size(); i += workers) {
          results[i] = analyse(batch[i], n_max);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back(work, w);
      }
    }
    for (const auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    for (const SearchRecord& record : results) {
      ++summary.records;
      if (record.tm_like == ThueMorseLike::Neither && record.last_zero) {
        summary.max_neither_last_zero =
            std::max(summary.max_neither_last_zero.value_or(0), *record.last_zero);
      }
      sink(record);
    }
  }
  return summary;
}

std::vector<SearchRecord> scan(std::uint64_t n, std::uint64_t n_max,
                               const ScanOptions& options) {
  std::vector<SearchRecord> out;
  scan_stream(n, n_max, options,
              [&](const SearchRecord& r) { out.push_back(r); });
  return out;
}

void write_scan_csv_header(std::ostream& out) {
  out << "spec,tm_like,last_zero,min_F_margin,min_E_slack_num\n";
}

void write_scan_csv_row(std::ostream& out, const SearchRecord& r) {
  out << '"' << format_spec(r.spec) << "\"," << to_string(r.tm_like) << ',';
  if (r.last_zero) {
    out << *r.last_zero;
  }
  out << ',';
  if (r.min_f_margin) {
    out << *r.min_f_margin;
  }
  out << ',' << r.min_e_slack_num << '\n';
}

}  // namespace repfn
