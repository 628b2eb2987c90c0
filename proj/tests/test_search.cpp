#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "repfn/constructions.hpp"
#include "repfn/representation.hpp"
#include "repfn/search.hpp"

using namespace repfn;

TEST_CASE("balanced prefix counts") {
  CHECK(balanced_prefix_count(1) == 2);
  CHECK(balanced_prefix_count(2) == 6);
  CHECK(balanced_prefix_count(8) == 12870);
  CHECK(balanced_prefix_count(10) == 184756);
}

TEST_CASE("enumerate_balanced_prefixes") {
  const auto one = enumerate_balanced_prefixes(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == SetSpec{1, {0}});
  CHECK(one[1] == SetSpec{1, {1}});

  const auto two = enumerate_balanced_prefixes(2);
  const std::vector<std::vector<std::uint64_t>> expected{
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  REQUIRE(two.size() == expected.size());
  for (std::size_t i = 0; i < two.size(); ++i) {
    CHECK(two[i].elements == expected[i]);
  }

  for (std::uint64_t n = 1; n <= 8; ++n) {
    const auto all = enumerate_balanced_prefixes(n);
    REQUIRE(all.size() == balanced_prefix_count(n));
    REQUIRE(std::is_sorted(all.begin(), all.end(), [](const SetSpec& a, const SetSpec& b) {
      return a.elements < b.elements;
    }));
    std::set<std::vector<std::uint64_t>> unique;
    for (const auto& s : all) {
      REQUIRE(s.elements.size() == n);
      REQUIRE(s.elements.back() < 2 * n);
      unique.insert(s.elements);
    }
    REQUIRE(unique.size() == all.size());
  }
  CHECK_THROWS_AS(BalancedPrefixes(11), std::invalid_argument);
  CHECK_THROWS_AS(BalancedPrefixes(0), std::invalid_argument);
}

TEST_CASE("scan at N = 3") {
  const auto records = scan(3, 200);
  REQUIRE(records.size() == 20);

  bool zero_at_eight = false;
  for (const auto& r : records) {
    if (r.tm_like != ThueMorseLike::Neither) {
      continue;
    }
    REQUIRE(r.last_zero);
    CHECK(*r.last_zero < 28);
    zero_at_eight = zero_at_eight ||
                    std::count(r.zeros.begin(), r.zeros.end(), 8) > 0;
  }
  CHECK(zero_at_eight);

  const auto c0 = std::find_if(records.begin(), records.end(), [](const SearchRecord& r) {
    return r.spec == SetSpec{3, {0, 3, 4}};
  });
  REQUIRE(c0 != records.end());
  CHECK(std::count(c0->zeros.begin(), c0->zeros.end(), 13) == 1);

  const auto t3 = std::find_if(records.begin(), records.end(), [](const SearchRecord& r) {
    return r.spec == thm3_set(3).spec();
  });
  REQUIRE(t3 != records.end());
  CHECK(*t3->last_zero >= 8);
}

TEST_CASE("scan record fields match direct profiles") {
  const auto records = scan(2, 100);
  for (const auto& r : records) {
    const auto r2 = r2_profile(SarkozySet::make(r.spec), 100).r2;
    std::uint64_t last = 0;
    std::uint64_t min_f = ~std::uint64_t{0};
    std::int64_t min_e = 0;
    for (std::uint64_t n = 0; n <= 100; ++n) {
      if (r2[n] == 0) {
        last = n;
      }
      if (n >= 14) {
        min_f = std::min(min_f, r2[n]);
      }
      if (n >= 1) {
        const std::int64_t e = 60 * (static_cast<std::int64_t>(r2[n]) + 1) -
                               static_cast<std::int64_t>(n + 3);
        min_e = n == 1 ? e : std::min(min_e, e);
      }
    }
    CHECK(*r.last_zero == last);
    CHECK(*r.min_f_margin == min_f);
    CHECK(r.min_e_slack_num == min_e);
  }
}

TEST_CASE("scan output order is independent of workers and chunking") {
  std::ostringstream serial;
  std::ostringstream parallel;
  const ScanOptions one{1};
  ScanOptions many{4};
  many.max_memory_bytes = 3 * 8 * 201 * 7;  // seven prefixes per chunk
  const auto s1 = scan_stream(4, 200, one, [&](const SearchRecord& r) {
    write_scan_csv_row(serial, r);
  });
  const auto s2 = scan_stream(4, 200, many, [&](const SearchRecord& r) {
    write_scan_csv_row(parallel, r);
  });
  CHECK(serial.str() == parallel.str());
  CHECK(s1.records == 70);
  CHECK(s1.max_neither_last_zero == s2.max_neither_last_zero);
  CHECK(*s1.max_neither_last_zero < s1.f_threshold);
}

TEST_CASE("scan preconditions") {
  CHECK_THROWS_AS(scan(3, 27), std::invalid_argument);
  CHECK_THROWS_AS(scan(11, 300), std::invalid_argument);
  ScanOptions tiny;
  tiny.max_memory_bytes = 16;
  CHECK_THROWS_AS(scan(3, 200, tiny), std::length_error);
  CHECK(default_scan_horizon(3) == 200);
  CHECK(default_scan_horizon(10) == 200);
  CHECK(default_scan_horizon(12) == 240);
}

TEST_CASE("scan CSV") {
  std::ostringstream out;
  write_scan_csv_header(out);
  const auto records = scan(1, 50);
  for (const auto& r : records) {
    write_scan_csv_row(out, r);
  }
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "spec,tm_like,last_zero,min_F_margin,min_E_slack_num");
  std::string row;
  std::getline(in, row);
  CHECK(row.rfind("\"N=1;P=0\",A0,", 0) == 0);
  std::getline(in, row);
  CHECK(row.rfind("\"N=1;P=1\",B0,", 0) == 0);
}
