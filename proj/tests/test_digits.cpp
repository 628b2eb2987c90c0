#include <doctest.h>

#include "oracles.hpp"
#include "repfn/bitvector.hpp"
#include "repfn/digits.hpp"

using namespace repfn;

TEST_CASE("digit_sum counts binary ones") {
  CHECK(digit_sum(0) == 0);
  CHECK(digit_sum(3) == 2);
  CHECK(digit_sum(7) == 3);
  CHECK(digit_sum(~std::uint64_t{0}) == 64);
  for (std::uint64_t a = 0; a < 5000; ++a) {
    REQUIRE(digit_sum(a) == oracle::ones(a));
  }
}

TEST_CASE("A0 and B0 membership") {
  CHECK(in_a0(0));
  CHECK_FALSE(in_a0(1));
  CHECK(in_a0(6));
  CHECK(in_b0(1));
  CHECK(parity(6) == DigitParity::Even);
  CHECK(parity(7) == DigitParity::Odd);
}

TEST_CASE("enumerate_a0") {
  CHECK(enumerate_a0(10) == std::vector<std::uint64_t>{0, 3, 5, 6, 9, 10});
  CHECK(enumerate_a0(0) == std::vector<std::uint64_t>{0});
  CHECK(enumerate_a0(2) == std::vector<std::uint64_t>{0});
  CHECK(enumerate_b0(4) == std::vector<std::uint64_t>{1, 2, 4});
}

TEST_CASE("parity doubling rule up to 2^20") {
  for (std::uint64_t a = 0; a <= (1U << 20); ++a) {
    REQUIRE(in_a0(2 * a) == in_a0(a));
    REQUIRE(in_a0(2 * a + 1) == !in_a0(a));
  }
}

TEST_CASE("each pair {2j, 2j+1} holds exactly one element of A0") {
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    count += in_a0(2 * n - 2) + in_a0(2 * n - 1);
    REQUIRE(count == n);
  }
}

TEST_CASE("digit sum splits across a shifted block") {
  for (std::uint64_t k = 1; k < 200; ++k) {
    for (unsigned l = 0; l < 10; ++l) {
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << l); i += 7) {
        REQUIRE(digit_sum((k << l) + i) == digit_sum(k) + digit_sum(i));
      }
    }
  }
}

TEST_CASE("BitVector window and reverse") {
  BitVector v(130);
  for (std::size_t i : {0, 5, 63, 64, 100, 129}) {
    v.set(i);
  }
  CHECK(v.count() == 6);
  CHECK(v.elements() == std::vector<std::uint64_t>{0, 5, 63, 64, 100, 129});
  for (std::int64_t start = -70; start < 140; ++start) {
    const std::uint64_t w = v.window(start);
    for (std::int64_t j = 0; j < 64; ++j) {
      const std::int64_t pos = start + j;
      const bool expected = pos >= 0 && pos < 130 && v.test(static_cast<std::size_t>(pos));
      REQUIRE(((w >> j) & 1U) == static_cast<std::uint64_t>(expected));
    }
  }
  const BitVector inv = ~v;
  CHECK(inv.count() == 124);
  CHECK(~inv == v);
  CHECK(reverse_bits(1) == (std::uint64_t{1} << 63));
  CHECK(reverse_bits(reverse_bits(0x0123456789ABCDEFULL)) == 0x0123456789ABCDEFULL);
}
