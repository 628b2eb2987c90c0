#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "repfn/constructions.hpp"
#include "repfn/digits.hpp"
#include "repfn/sets.hpp"

using namespace repfn;

namespace {

std::set<std::uint64_t> prefix_set(const SarkozySet& s) {
  const auto e = s.spec().elements;
  return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("make_set with N=1 and {0} is A0") {
  const SarkozySet a0 = SarkozySet::make({1, {0}});
  for (std::uint64_t x = 0; x <= 10000; ++x) {
    REQUIRE(a0.contains(x) == in_a0(x));
  }
  CHECK(a0 == SarkozySet::a0());
}

TEST_CASE("make_set validation") {
  const SarkozySet c0 = SarkozySet::make({3, {0, 3, 4}});
  CHECK(c0.threshold() == 3);
  CHECK(c0.balanced());
  CHECK_THROWS_AS(SarkozySet::make({2, {0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SarkozySet::make({2, {0, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(SarkozySet::make({2, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SarkozySet::make({0, {}}), std::invalid_argument);
  const SarkozySet loose = SarkozySet::make_unchecked({2, {0, 1, 2}});
  CHECK_FALSE(loose.balanced());
  CHECK_THROWS_AS(SarkozySet::make_unchecked({2, {7}}), std::invalid_argument);
}

TEST_CASE("contains") {
  const SarkozySet c0 = SarkozySet::make({3, {0, 3, 4}});
  CHECK(c0.contains(4));
  CHECK_FALSE(c0.contains(5));
  CHECK(thm3_set(5).contains(14));
  // Prefix region reads the bit directly.
  for (std::uint64_t x = 0; x < 6; ++x) {
    CHECK(c0.contains(x) == (x == 0 || x == 3 || x == 4));
  }
  // Far past any enumerated horizon.
  const std::uint64_t big = (std::uint64_t{1} << 62) + 12345;
  CHECK(c0.contains(big) == oracle::member({0, 3, 4}, 3, big));
}

TEST_CASE("enumerate follows the doubling rule") {
  const SarkozySet c0 = SarkozySet::make({3, {0, 3, 4}});
  // Frozen from the recursive oracle.
  CHECK(c0.enumerate(11).elements() == std::vector<std::uint64_t>{0, 3, 4, 6, 8, 11});
  CHECK(SarkozySet::a0().enumerate(10).elements() == enumerate_a0(10));
  const BitVector single = c0.enumerate(0);
  CHECK(single.size() == 1);
  CHECK(single.test(0));
  CHECK(SarkozySet::make({4, {1, 2, 5, 6}}).enumerate(3).elements() ==
        std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("complement") {
  const SarkozySet a0 = SarkozySet::a0();
  CHECK(a0.complement() == SarkozySet::b0());
  const SarkozySet c0 = SarkozySet::make({3, {0, 3, 4}});
  CHECK(c0.complement().complement() == c0);
  CHECK(c0.complement().spec().elements == std::vector<std::uint64_t>{1, 2, 5});
  for (std::uint64_t x = 0; x < 3000; ++x) {
    REQUIRE(c0.complement().contains(x) == !c0.contains(x));
  }
}

TEST_CASE("is_thue_morse_like") {
  CHECK(is_thue_morse_like(SarkozySet::make({4, {0, 3, 5, 6}})) == ThueMorseLike::IsA0);
  CHECK(is_thue_morse_like(SarkozySet::make({3, {0, 3, 4}})) == ThueMorseLike::Neither);
  CHECK(is_thue_morse_like(SarkozySet::make({4, {0, 3, 5, 6}}).complement()) ==
        ThueMorseLike::IsB0);
  CHECK(is_thue_morse_like(SarkozySet::b0()) == ThueMorseLike::IsB0);
}

TEST_CASE("intersects_infinitely") {
  CHECK(intersects_infinitely(SarkozySet::a0(), ThueMorseClass::A0));
  CHECK_FALSE(intersects_infinitely(SarkozySet::a0(), ThueMorseClass::B0));
  CHECK(intersects_infinitely(thm1_set(4), ThueMorseClass::A0));
  CHECK(intersects_infinitely(thm1_set(4), ThueMorseClass::B0));
  // Differs from A0 only below N: neither A0 nor B0, yet A ∩ B0 is finite.
  const SarkozySet low = SarkozySet::make({2, {1, 3}});
  CHECK(is_thue_morse_like(low) == ThueMorseLike::Neither);
  CHECK(intersects_infinitely(low, ThueMorseClass::A0));
  CHECK_FALSE(intersects_infinitely(low, ThueMorseClass::B0));
}

TEST_CASE("intersects_infinitely matches enumeration to 2^20") {
  // Over the top dyadic block every infinite class still has members and
  // every finite one has none; the block [2^19, 2^20) lies past 2N for N <= 16.
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint64_t n = 1 + gen() % 16;
    const SarkozySet s = random_balanced_set(n, gen());
    const BitVector members = s.enumerate(1U << 20);
    bool hit_a0 = false;
    bool hit_b0 = false;
    for (std::uint64_t x = 32 * n; x <= (1U << 20); ++x) {
      if (members.test(x)) {
        (in_a0(x) ? hit_a0 : hit_b0) = true;
      }
    }
    REQUIRE(hit_a0 == intersects_infinitely(s, ThueMorseClass::A0));
    REQUIRE(hit_b0 == intersects_infinitely(s, ThueMorseClass::B0));
  }
}

TEST_CASE("closed form agrees with the recurrence pass") {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t n = 1 + gen() % 16;
    const SarkozySet s = random_balanced_set(n, gen());
    const BitVector members = s.enumerate(100000);
    for (std::uint64_t x = 0; x <= 100000; ++x) {
      REQUIRE(members.test(x) == s.contains(x));
    }
    const auto prefix = prefix_set(s);
    for (std::uint64_t x = 0; x < 2000; x += 3) {
      REQUIRE(s.contains(x) == oracle::member(prefix, n, x));
    }
  }
}

TEST_CASE("Lemma 1 clauses hold for random sets") {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t n = 1 + gen() % 8;
    const SarkozySet s = random_balanced_set(n, gen());
    for (std::uint64_t k = n; k <= 4 * n; ++k) {
      for (unsigned l = 0; l <= 12; ++l) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << l); ++i) {
          const bool shifted = s.contains((k << l) + i);
          REQUIRE(shifted == (oracle::ones(i) % 2 == 0 ? s.contains(k) : !s.contains(k)));
        }
      }
    }
  }
}

TEST_CASE("balance propagates to every dyadic horizon") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t n = 1 + gen() % 16;
    const SarkozySet s = random_balanced_set(n, gen());
    const BitVector members = s.enumerate((2 * n << 10) - 1);
    for (unsigned l = 0; l <= 10; ++l) {
      std::uint64_t count = 0;
      for (std::uint64_t x = 0; x < (2 * n << l); ++x) {
        count += members.test(x);
      }
      REQUIRE(count == (n << l));
    }
  }
}

TEST_CASE("complement and enumerate commute") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    const SarkozySet s = random_balanced_set(1 + gen() % 12, gen());
    const std::uint64_t limit = gen() % 5000;
    REQUIRE(s.complement().enumerate(limit) == ~s.enumerate(limit));
  }
}

TEST_CASE("spec text format") {
  CHECK(parse_spec("N=3;P=0,3,4") == SetSpec{3, {0, 3, 4}});
  CHECK(parse_spec("  N = 3 ; P = 4 , 0,3 ") == SetSpec{3, {0, 3, 4}});
  CHECK(format_spec({3, {0, 3, 4}}) == "N=3;P=0,3,4");
  CHECK_THROWS_AS(parse_spec("N=2;P=0,5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("N=2;P="), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("N=2,P=0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("N=2;P=0,1;"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("N=2;P=0,-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("N=2;P=1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec(""), std::invalid_argument);

  // Round trip over random canonical specs.
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const SetSpec spec = random_balanced_set(1 + gen() % 40, gen()).spec();
    REQUIRE(parse_spec(format_spec(spec)) == spec);
  }
}

TEST_CASE("random_balanced_set is reproducible and balanced") {
  CHECK(random_balanced_set(8, 42) == random_balanced_set(8, 42));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SarkozySet s = random_balanced_set(1 + seed % 8, seed);
    REQUIRE(s.balanced());
  }
}
