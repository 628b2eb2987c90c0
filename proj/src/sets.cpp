#include "repfn/sets.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>
#include <random>
#include <stdexcept>

#include "repfn/digits.hpp"

namespace repfn {
namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  SetSpec parse() {
    SetSpec spec;
    expect_literal('N');
    expect_literal('=');
    spec.n = parse_int();
    expect_literal(';');
    expect_literal('P');
    expect_literal('=');
    spec.elements.push_back(parse_int());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      spec.elements.push_back(parse_int());
      skip_ws();
    }
    if (pos_ != text_.size()) {
      fail("trailing characters");
    }
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed set spec '" + std::string(text_) +
                                "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  void expect_literal(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::uint64_t parse_int() {
    skip_ws();
    std::uint64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
      fail("expected a nonnegative integer");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void validate_threshold(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("set spec: N must be positive");
  }
  if (n > kMaxPrefixLength / 2) {
    throw std::invalid_argument("set spec: N=" + std::to_string(n) +
                                " exceeds the supported prefix length");
  }
}

BitVector prefix_from_spec(const SetSpec& spec) {
  validate_threshold(spec.n);
  BitVector prefix(static_cast<std::size_t>(2 * spec.n));
  for (const std::uint64_t e : spec.elements) {
    if (e >= 2 * spec.n) {
      throw std::invalid_argument("set spec: element " + std::to_string(e) +
                                  " exceeds 2N-1 = " +
                                  std::to_string(2 * spec.n - 1));
    }
    if (prefix.test(e)) {
      throw std::invalid_argument("set spec: duplicate element " +
                                  std::to_string(e));
    }
    prefix.set(e);
  }
  return prefix;
}

}  // namespace

SetSpec parse_spec(std::string_view text) {
  SetSpec spec = SpecParser(text).parse();
  // Range and duplicate checks; the prefix itself is discarded.
  (void)prefix_from_spec(spec);
  std::sort(spec.elements.begin(), spec.elements.end());
  return spec;
}

std::string format_spec(const SetSpec& spec) {
  std::string out = "N=" + std::to_string(spec.n) + ";P=";
  for (std::size_t i = 0; i < spec.elements.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += std::to_string(spec.elements[i]);
  }
  return out;
}

const char* to_string(ThueMorseLike t) noexcept {
  switch (t) {
    case ThueMorseLike::IsA0:
      return "A0";
    case ThueMorseLike::IsB0:
      return "B0";
    case ThueMorseLike::Neither:
      return "neither";
  }
  return "?";
}

SarkozySet SarkozySet::make(const SetSpec& spec) {
  BitVector prefix = prefix_from_spec(spec);
  if (prefix.count() != spec.n) {
    throw std::invalid_argument(
        "set spec: unbalanced prefix, " + std::to_string(prefix.count()) +
        " elements in [0, 2N-1] but N=" + std::to_string(spec.n));
  }
  return SarkozySet(spec.n, std::move(prefix));
}

SarkozySet SarkozySet::make_unchecked(const SetSpec& spec) {
  return SarkozySet(spec.n, prefix_from_spec(spec));
}

SarkozySet SarkozySet::from_prefix(BitVector prefix, bool unchecked) {
  if (prefix.empty() || prefix.size() % 2 != 0) {
    throw std::invalid_argument("prefix length must be a positive even number");
  }
  const std::uint64_t n = prefix.size() / 2;
  validate_threshold(n);
  if (!unchecked && prefix.count() != n) {
    throw std::invalid_argument("unbalanced prefix");
  }
  return SarkozySet(n, std::move(prefix));
}

bool SarkozySet::contains(std::uint64_t x) const noexcept {
  if (x < 2 * n_) {
    return prefix_.test(static_cast<std::size_t>(x));
  }
  // Shift x down until its quotient lands in [N, 2N-1].
  auto shift = static_cast<unsigned>(std::bit_width(x) - std::bit_width(n_));
  if ((x >> shift) < n_) {
    --shift;
  }
  const std::uint64_t k = x >> shift;
  const std::uint64_t i = x & ((std::uint64_t{1} << shift) - 1);
  return prefix_.test(static_cast<std::size_t>(k)) != parity_bit(i);
}

BitVector SarkozySet::enumerate(std::uint64_t limit) const {
  BitVector out(static_cast<std::size_t>(limit) + 1);
  const std::uint64_t head = std::min<std::uint64_t>(limit + 1, 2 * n_);
  for (std::uint64_t x = 0; x < head; ++x) {
    out.set(x, prefix_.test(x));
  }
  for (std::uint64_t x = 2 * n_; x <= limit; ++x) {
    const bool half = out.test(x >> 1);
    out.set(x, (x & 1) != 0 ? !half : half);
  }
  return out;
}

SarkozySet SarkozySet::complement() const { return SarkozySet(n_, ~prefix_); }

SetSpec SarkozySet::spec() const { return SetSpec{n_, prefix_.elements()}; }

ThueMorseLike is_thue_morse_like(const SarkozySet& s) {
  bool like_a0 = true;
  bool like_b0 = true;
  for (std::uint64_t a = 0; a < 2 * s.threshold(); ++a) {
    const bool member = s.prefix().test(a);
    like_a0 = like_a0 && member == in_a0(a);
    like_b0 = like_b0 && member == in_b0(a);
  }
  if (like_a0) {
    return ThueMorseLike::IsA0;
  }
  return like_b0 ? ThueMorseLike::IsB0 : ThueMorseLike::Neither;
}

bool intersects_infinitely(const SarkozySet& s, ThueMorseClass which) {
  const bool want_agree = which == ThueMorseClass::A0;
  for (std::uint64_t k = s.threshold(); k < 2 * s.threshold(); ++k) {
    const bool agrees = s.prefix().test(k) == in_a0(k);
    if (agrees == want_agree) {
      return true;
    }
  }
  return false;
}

SarkozySet random_balanced_set(std::uint64_t n, std::uint64_t seed) {
  validate_threshold(n);
  std::mt19937_64 gen(seed);
  std::vector<std::uint64_t> pool(static_cast<std::size_t>(2 * n));
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = pool.size() - 1; i > 0; --i) {
    std::swap(pool[i], pool[gen() % (i + 1)]);
  }
  pool.resize(static_cast<std::size_t>(n));
  std::sort(pool.begin(), pool.end());
  return SarkozySet::make(SetSpec{n, std::move(pool)});
}

}  // namespace repfn
