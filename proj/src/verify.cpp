#include "repfn/verify.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "repfn/constructions.hpp"
#include "repfn/digits.hpp"
#include "repfn/representation.hpp"

namespace repfn {
namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("bound margin does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

// Tracks the smallest slack num/den over a range, den fixed per check.
class WorstMargin {
 public:
  explicit WorstMargin(Wide den) : den_(den) {}

  void observe(std::uint64_t n, Wide num) {
    if (!worst_n_ || num < worst_num_) {
      worst_n_ = n;
      worst_num_ = num;
    }
  }

  void fill(BoundReport& report) const {
    report.passed = !worst_n_ || worst_num_ >= 0;
    if (worst_n_) {
      report.worst_n = worst_n_;
      report.worst_margin = Rational{narrow(worst_num_), narrow(den_)};
    }
  }

 private:
  Wide den_;
  std::optional<std::uint64_t> worst_n_;
  Wide worst_num_ = 0;
};

// Compares two profiles on [lo, n_max]; records the first disagreement.
void compare_profiles(BoundReport& report, const std::vector<std::uint64_t>& a,
                      const std::vector<std::uint64_t>& b, std::uint64_t lo) {
  report.passed = true;
  for (std::uint64_t n = lo; n < a.size(); ++n) {
    if (a[n] != b[n]) {
      report.passed = false;
      report.worst_n = n;
      const auto diff = static_cast<std::int64_t>(a[n] > b[n] ? a[n] - b[n]
                                                               : b[n] - a[n]);
      report.worst_margin = Rational{-diff, 1};
      return;
    }
  }
}

}  // namespace

const char* to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::ThmA:
      return "ThmA";
    case TheoremId::Dombi:
      return "Dombi";
    case TheoremId::Lemma1:
      return "Lemma1";
    case TheoremId::Thm1:
      return "Thm1";
    case TheoremId::Thm2:
      return "Thm2";
    case TheoremId::Thm3:
      return "Thm3";
    case TheoremId::ThmB:
      return "ThmB";
    case TheoremId::ThmE:
      return "ThmE";
    case TheoremId::ThmE_Cross:
      return "ThmE_cross";
    case TheoremId::ThmF:
      return "ThmF";
    case TheoremId::ThmD_density:
      return "ThmD_density";
    case TheoremId::Cor3:
      return "Cor3";
  }
  return "?";
}

BoundReport check_theorem_a(const SarkozySet& s, std::uint64_t n_max,
                            unsigned workers) {
  const std::uint64_t lo = 2 * s.threshold() - 1;
  if (n_max < lo) {
    throw std::invalid_argument("check_theorem_a: n_max must be at least 2N-1");
  }
  BoundReport report{TheoremId::ThmA, s.spec(), {lo, n_max}};
  const auto a = r2_profile(s, n_max, Method::BitParallel, workers);
  const auto c = r2_profile(s.complement(), n_max, Method::BitParallel, workers);
  compare_profiles(report, a.r2, c.r2, lo);
  return report;
}

BoundReport check_dombi(std::uint64_t n_max, unsigned workers) {
  const SarkozySet a0 = SarkozySet::a0();
  BoundReport report{TheoremId::Dombi, a0.spec(), {0, n_max}};
  const auto a = r2_profile(a0, n_max, Method::BitParallel, workers);
  const auto b = r2_profile(SarkozySet::b0(), n_max, Method::BitParallel, workers);
  compare_profiles(report, a.r2, b.r2, 0);
  return report;
}

BoundReport check_lemma1(const SarkozySet& s, std::uint64_t k_max,
                         unsigned l_max) {
  const std::uint64_t n = s.threshold();
  if (k_max < n) {
    throw std::invalid_argument("check_lemma1: k_max must be at least N");
  }
  if (l_max > 24) {
    throw std::invalid_argument("check_lemma1: l_max above 24 is not supported");
  }
  BoundReport report{TheoremId::Lemma1, s.spec(), {n, k_max}};
  const std::uint64_t top = ((k_max + 1) << l_max) - 1;
  const BitVector members = s.enumerate(top);
  for (std::uint64_t k = n; k <= k_max; ++k) {
    const bool k_in = members.test(k);
    for (unsigned l = 0; l <= l_max; ++l) {
      const std::uint64_t base = k << l;
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << l); ++i) {
        const bool expected = parity_bit(i) ? !k_in : k_in;
        if (members.test(base + i) != expected) {
          report.passed = false;
          report.worst_n = base + i;
          report.worst_margin = Rational{-1, 1};
          return report;
        }
      }
    }
  }
  return report;
}

BoundReport check_thm1_upper(const SarkozySet& s, unsigned m_max,
                             TheoremId id) {
  const std::uint64_t n = s.threshold();
  if (n < 2) {
    throw std::invalid_argument("check_thm1_upper: N must be at least 2");
  }
  if (m_max > 14) {
    throw std::invalid_argument("check_thm1_upper: m_max above 14 is not supported");
  }
  // 4^m > N-1  <=>  2m > log2(N-1).
  unsigned m_lo = 0;
  while ((std::uint64_t{1} << (2 * m_lo)) <= n - 1) {
    ++m_lo;
  }
  const auto floor_log = static_cast<unsigned>(std::bit_width(n - 1) - 1);
  const Wide den = Wide{4} << floor_log;
  BoundReport report{id, s.spec()};
  if (m_lo > m_max) {
    return report;
  }
  const std::uint64_t first = (std::uint64_t{1} << (2 * m_lo + 1)) - 1;
  const std::uint64_t last = (std::uint64_t{1} << (2 * m_max + 1)) - 1;
  report.n_range = {first, last};
  const BitVector members = s.enumerate(last);
  WorstMargin worst(den);
  for (unsigned m = m_lo; m <= m_max; ++m) {
    const std::uint64_t target = (std::uint64_t{1} << (2 * m + 1)) - 1;
    const Wide r2 = r2_at(members, target);
    worst.observe(target, Wide{target + 1} - den * r2);
  }
  worst.fill(report);
  return report;
}

BoundReport check_cor3_upper(std::uint64_t k, unsigned m_max) {
  return check_thm1_upper(cor3_set(k), m_max, TheoremId::Cor3);
}

namespace {

BoundReport zero_with_equivalence(TheoremId id, const SarkozySet& s,
                                  std::uint64_t target, std::uint64_t n_max) {
  BoundReport report{id, s.spec(), {target, target}};
  const BitVector members = s.enumerate(target);
  const std::uint64_t r2 = r2_at(members, target);
  if (r2 != 0) {
    report.passed = false;
    report.worst_n = target;
    report.worst_margin = Rational{-static_cast<std::int64_t>(r2), 1};
    return report;
  }
  const BoundReport equivalence = check_theorem_a(s, n_max);
  report.n_range.second = std::max(target, n_max);
  report.passed = equivalence.passed;
  report.worst_n = equivalence.worst_n;
  report.worst_margin = equivalence.worst_margin;
  return report;
}

}  // namespace

BoundReport check_thm2_zero(std::uint64_t k, std::uint64_t n_max) {
  const SarkozySet c = thm2_set(k);
  const std::uint64_t target = 14 * (std::uint64_t{1} << (2 * k)) - 1;
  return zero_with_equivalence(TheoremId::Thm2, c, target, n_max);
}

BoundReport check_thm3_zero(std::uint64_t n, std::uint64_t n_max) {
  return zero_with_equivalence(TheoremId::Thm3, thm3_set(n), 3 * n - 1, n_max);
}

std::vector<BoundReport> check_lower_bounds(const SarkozySet& s,
                                            std::uint64_t n_max,
                                            unsigned workers) {
  if (!s.balanced()) {
    throw std::invalid_argument("check_lower_bounds: set must be balanced");
  }
  const Wide n = s.threshold();
  const bool both = n >= 2 && intersects_infinitely(s, ThueMorseClass::A0) &&
                    intersects_infinitely(s, ThueMorseClass::B0);
  const bool neither = n >= 2 && is_thue_morse_like(s) == ThueMorseLike::Neither;
  std::vector<BoundReport> reports;
  if (!both && !neither) {
    return reports;
  }

  const SarkozySet comp = s.complement();
  const BitVector members = s.enumerate(n_max);
  const auto r2 = r2_profile(members, n_max, Method::BitParallel, workers).r2;

  if (both) {
    const auto rab =
        cross_profile(members, comp.enumerate(n_max), n_max,
                      Method::BitParallel, workers).rab;
    const Wide den_e = 56 * n - 52;
    const Wide den_x = 28 * n - 26;
    const Wide den_b = 40 * n * (n + 1);
    WorstMargin e(den_e), x(den_x), b(den_b);
    for (std::uint64_t m = 1; m <= n_max; ++m) {
      e.observe(m, den_e * (Wide{r2[m]} + 1) - (Wide{m} + 3));
      x.observe(m, den_x * (Wide{rab[m]} + 1) - (Wide{m} + 3));
      b.observe(m, den_b * (Wide{r2[m]} + 1) - Wide{m});
    }
    for (auto [id, worst] : {std::pair{TheoremId::ThmE, &e},
                             std::pair{TheoremId::ThmE_Cross, &x},
                             std::pair{TheoremId::ThmB, &b}}) {
      BoundReport report{id, s.spec(), {1, n_max}};
      worst->fill(report);
      reports.push_back(std::move(report));
    }
  }

  if (neither) {
    const auto lo = static_cast<std::uint64_t>(14 * (n - 1));
    BoundReport report{TheoremId::ThmF, s.spec(), {lo, n_max}};
    WorstMargin f(1);
    for (std::uint64_t m = lo; m <= n_max; ++m) {
      f.observe(m, Wide{r2[m]} - 1);
    }
    f.fill(report);
    reports.push_back(std::move(report));
  }
  return reports;
}

long double theta_limit() noexcept {
  const long double l2 = std::log(2.0L);
  const long double l3 = std::log(3.0L);
  return (2 * l2 - l3) / (42 * l2 - 9 * l3);
}

DensityReport empirical_density(const SarkozySet& s, std::uint64_t n_max,
                                double theta, double c, unsigned workers) {
  // Compared in double so that the double nearest the limit is rejected.
  if (!(theta > 0) || !(theta < static_cast<double>(theta_limit()))) {
    throw std::invalid_argument("empirical_density: theta must lie in (0, " +
                                std::to_string(static_cast<double>(theta_limit())) +
                                ")");
  }
  if (!(c >= 0) || !std::isfinite(c)) {
    throw std::invalid_argument("empirical_density: C must be finite and >= 0");
  }
  if (!s.balanced()) {
    throw std::invalid_argument("empirical_density: set must be balanced");
  }
  DensityReport report{n_max, theta, c};
  report.histogram.assign(65, 0);
  if (n_max == 0) {
    return report;
  }
  const auto r2 = r2_profile(s, n_max, Method::BitParallel, workers).r2;
  const long double exponent = 1.0L - static_cast<long double>(theta);
  const long double inf = std::numeric_limits<long double>::infinity();
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    // |R2 - n/8| <= C n^(1-theta)  <=>  |8 R2 - n| <= 8 C n^(1-theta).
    long double slack = 8.0L * c * std::pow(static_cast<long double>(n), exponent);
    slack = std::nextafter(std::nextafter(slack, inf), inf);
    const std::uint64_t scaled = 8 * r2[n];
    const std::uint64_t dev = scaled > n ? scaled - n : n - scaled;
    if (static_cast<long double>(dev) <= slack) {
      ++report.hits;
    }
    const std::uint64_t bucket = std::min<std::uint64_t>(64, 64 * r2[n] / n);
    ++report.histogram[bucket];
  }
  report.qualifying = n_max;
  report.density = static_cast<double>(report.hits) / static_cast<double>(n_max);
  return report;
}

std::vector<RatioPoint> ratio_sequence(const SarkozySet& s, RatioSequence seq,
                                       std::uint64_t count) {
  std::vector<std::uint64_t> points;
  points.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 1 << 16)));
  constexpr std::uint64_t kHorizon = std::uint64_t{1} << 29;
  for (std::uint64_t j = 0; j < count; ++j) {
    std::uint64_t n = 0;
    if (seq.kind == RatioSequence::Kind::OddPowerOfTwoMinusOne) {
      if (2 * j + 1 > 29) {
        throw std::invalid_argument("ratio_sequence: n exceeds the 2^29 horizon");
      }
      n = (std::uint64_t{1} << (2 * j + 1)) - 1;
    } else {
      if (seq.step == 0) {
        throw std::invalid_argument("ratio_sequence: step must be positive");
      }
      if (seq.step > kHorizon / (j + 1)) {
        throw std::invalid_argument("ratio_sequence: n exceeds the 2^29 horizon");
      }
      n = seq.step * (j + 1);
    }
    points.push_back(n);
  }
  std::vector<RatioPoint> out;
  if (points.empty()) {
    return out;
  }
  const BitVector members = s.enumerate(points.back());
  for (const std::uint64_t n : points) {
    const std::uint64_t r2 = r2_at(members, n);
    out.push_back({n, r2, static_cast<double>(r2) / static_cast<double>(n)});
  }
  return out;
}

void write_report_csv_header(std::ostream& out) {
  out << "theorem_id,set_spec,n_lo,n_hi,passed,worst_n,worst_margin_num,"
         "worst_margin_den\n";
}

void write_report_csv_row(std::ostream& out, const BoundReport& r) {
  out << to_string(r.theorem) << ",\"" << format_spec(r.set) << "\","
      << r.n_range.first << ',' << r.n_range.second << ','
      << (r.passed ? 1 : 0) << ',';
  if (r.worst_n) {
    out << *r.worst_n;
  }
  out << ',';
  if (r.worst_margin) {
    out << r.worst_margin->num << ',' << r.worst_margin->den;
  } else {
    out << ',';
  }
  out << '\n';
}

}  // namespace repfn
