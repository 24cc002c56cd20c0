#include <doctest.h>

#include <random>

#include "subsum/combinators.hpp"

using namespace subsum;

namespace {
Rational q(int p, int d) { return Rational(p) / d; }
}  // namespace

TEST_CASE("adjoin") {
  auto s = SequenceSpec::geometric(1, {q(1, 3)});
  auto t = adjoin(q(1, 2), s);
  CHECK(t.prefix.size() == 2);
  CHECK(t.total_sum() == s.total_sum() + q(1, 2));
  CHECK(t.tail == SequenceSpec::TailKind::Geometric);
  CHECK_THROWS_AS(adjoin(0, s), std::invalid_argument);
  CHECK_THROWS_AS(adjoin(-1, s), std::invalid_argument);
}

TEST_CASE("adjoining the total sum adds the value 2") {
  auto bare = SequenceSpec::geometric(1);
  CHECK(range_exact(adjoin_total_sum(bare)) == RangeSet{1, 2});

  auto third = SequenceSpec::geometric(1, {q(1, 3)});
  CHECK(range_exact(third) == RangeSet{1, 2, 3});
  auto extended = adjoin_total_sum(third);
  CHECK(extended.total_sum() == 2 * third.total_sum());
  CHECK(range_exact(extended) == RangeSet{1, 2, 3});

  std::mt19937_64 rng(83);
  std::uniform_int_distribution<int> nd(1, 12), dd(1, 12), len(0, 2);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Rational> prefix;
    int n = len(rng);
    for (int i = 0; i < n; ++i) prefix.push_back(q(nd(rng), dd(rng)));
    auto s = SequenceSpec::geometric(1, prefix);
    RangeSet want = range_exact(s);
    want.finites.insert(2);
    CHECK(range_exact(adjoin_total_sum(s)) == want);
  }
}

TEST_CASE("scale-concat multiplies ranges") {
  FiniteSequence pair({Rational(1), Rational(1)});
  auto bare = SequenceSpec::geometric(1);

  auto d4 = scale_concat(pair, bare);
  CHECK(range_exact(d4) == RangeSet{1, 2, 4});

  FiniteSequence triple({Rational(1), Rational(1), Rational(1)});
  CHECK(range_exact(scale_concat(triple, bare)) == RangeSet{1, 2, 3, 6});

  FiniteSequence head({Rational(1), Rational(1), Rational(2), Rational(3)});
  CHECK(range_exact(scale_concat(head, bare)) == RangeSet{1, 2, 3, 4, 6});

  std::mt19937_64 rng(89);
  std::uniform_int_distribution<int> hv(1, 4), hl(1, 4), nd(1, 8), dd(1, 8), len(0, 2);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Rational> ht;
    int hn = hl(rng);
    for (int i = 0; i < hn; ++i) ht.emplace_back(hv(rng));
    FiniteSequence h(ht);
    std::vector<Rational> prefix;
    int n = len(rng);
    for (int i = 0; i < n; ++i) prefix.push_back(q(nd(rng), dd(rng)));
    auto s = SequenceSpec::geometric(1, prefix);
    CHECK(range_exact(scale_concat(h, s), 24) ==
          product_range(range_of(h), range_exact(s)));
  }
}

TEST_CASE("range preservation under adjoined terms") {
  auto bare = SequenceSpec::geometric(1);
  CHECK(cis_contains(bare, 2));
  CHECK(cis_contains(bare, 1));
  CHECK_FALSE(cis_contains(bare, q(3, 4)));
  CHECK_FALSE(cis_contains(bare, q(1, 3)));

  auto s = SequenceSpec::geometric(1, {q(3, 4)});
  CHECK(cis_contains(s, q(7, 4)));  // the total sum, since 2 is in the range
  CHECK(cis_contains(s, 2));

  CHECK_THROWS_AS(cis_contains(SequenceSpec::gn(1), q(1, 2)), std::invalid_argument);
}

TEST_CASE("terms beyond the total sum always preserve the range") {
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<int> nd(1, 9), dd(1, 9), len(0, 2);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Rational> prefix;
    int n = len(rng);
    for (int i = 0; i < n; ++i) prefix.push_back(q(nd(rng), dd(rng)));
    auto s = SequenceSpec::geometric(1, prefix);
    Rational beyond = s.total_sum() + q(nd(rng), dd(rng));
    CHECK(cis_contains(s, beyond));

    // adjoining the total sum preserves the range exactly when 2 is attained
    CHECK(cis_contains(s, s.total_sum()) == range_exact(s).contains(2));
  }
}
