#include <doctest.h>

#include <random>

#include "qrs/numeric.hpp"
#include "qrs/reconstruct.hpp"

using namespace qrs;

TEST_CASE("squarefree split") {
  auto [s1, c1] = squarefree_split(Int(12));
  CHECK(s1 == 2);
  CHECK(c1 == 3);
  auto [s2, c2] = squarefree_split(Int(49));
  CHECK(s2 == 7);
  CHECK(c2 == 1);
  auto [s3, c3] = squarefree_split(Int(1969));  // 11 * 179
  CHECK(s3 == 1);
  CHECK(c3 == 1969);
}

TEST_CASE("surd arithmetic is exact field arithmetic") {
  SurdSum a = SurdSum::surd(Rat(1, 2), Int(2));  // sqrt(2)/2
  SurdSum b = SurdSum(Rat(1, 3)) + SurdSum::surd(Rat(2), Int(3));

  CHECK((a * a) == SurdSum(Rat(1, 2)));
  CHECK((a - a).is_zero());
  CHECK((a * b - b * a).is_zero());

  // inverse round-trips through several primes
  SurdSum v = SurdSum(Rat(3, 7)) + SurdSum::surd(Rat(1, 2), Int(6)) +
              SurdSum::surd(Rat(-2, 5), Int(10));
  CHECK((v * v.inverse()) == SurdSum(1));
  CHECK(std::fabs(v.inverse().to_double() - 1.0 / v.to_double()) < 1e-12);
}

TEST_CASE("surd normalization merges radicands") {
  // sqrt(8) = 2 sqrt(2)
  auto s = SurdSum::surd(Rat(1), Int(8));
  CHECK(s == SurdSum::surd(Rat(2), Int(2)));
  // sqrt(2)*sqrt(6) = 2 sqrt(3)
  auto p = SurdSum::surd(Rat(1), Int(2)) * SurdSum::surd(Rat(1), Int(6));
  CHECK(p == SurdSum::surd(Rat(2), Int(3)));
}

TEST_CASE("sqrt_of rationals") {
  CHECK(SurdSum::sqrt_of(Rat(4)) == SurdSum(2));
  CHECK(SurdSum::sqrt_of(Rat(7, 2)) == SurdSum::surd(Rat(1, 2), Int(14)));
  CHECK(SurdSum::sqrt_of(Rat(0)).is_zero());
}

TEST_CASE("rational reconstruction via continued fractions") {
  CHECK(*rational_reconstruct(0.5, 1000) == Rat(1, 2));
  CHECK(*rational_reconstruct(-13.0 / 60, 1000) == Rat(-13, 60));
  CHECK(*rational_reconstruct(4675.0 / 124774, 100'000'000) == Rat(4675, 124774));
}

TEST_CASE("recognize rationals, pure surds and shifted surds") {
  auto r = recognize_real(1.0 / 3);
  REQUIRE(r);
  CHECK(r->to_surd() == SurdSum(Rat(1, 3)));

  // sqrt(14)/32
  auto s = recognize_real(std::sqrt(14.0) / 32);
  REQUIRE(s);
  CHECK(s->to_surd() == SurdSum::surd(Rat(1, 32), Int(14)));

  // 1/(4 sqrt(2)) = sqrt(2)/8
  auto t = recognize_real(1.0 / (4 * std::sqrt(2.0)));
  REQUIRE(t);
  CHECK(t->to_surd() == SurdSum::surd(Rat(1, 8), Int(2)));

  // (1 + 3 sqrt(11/179))/8
  double val = (1 + 3 * std::sqrt(11.0 / 179.0)) / 8;
  auto u = recognize_real(val);
  REQUIRE(u);
  SurdSum expect = SurdSum(Rat(1, 8)) + SurdSum::surd(Rat(3, 8 * 179), Int(11 * 179));
  CHECK(u->to_surd() == expect);

  // 3/2 - (11/2) sqrt(11/4799)
  double w = 1.5 - 5.5 * std::sqrt(11.0 / 4799.0);
  auto wv = recognize_real(w);
  REQUIRE(wv);
  SurdSum expect_w = SurdSum(Rat(3, 2)) - SurdSum::surd(Rat(11, 2 * 4799), Int(11 * 4799));
  CHECK(wv->to_surd() == expect_w);

  // 9/206 + sqrt(3/2)/103 = 9/206 + sqrt(6)/206
  double q = 9.0 / 206 + std::sqrt(1.5) / 103;
  auto qv = recognize_real(q);
  REQUIRE(qv);
  SurdSum expect_q = SurdSum(Rat(9, 206)) + SurdSum::surd(Rat(1, 206), Int(6));
  CHECK(qv->to_surd() == expect_q);

  // 85 sqrt(11/4799)/26: a pure surd with a large reduced denominator
  double big = 85 * std::sqrt(11.0 / 4799.0) / 26;
  auto bv = recognize_real(big);
  REQUIRE(bv);
  SurdSum expect_b = SurdSum::surd(Rat(85, 26 * 4799), Int(11 * 4799));
  CHECK(bv->to_surd() == expect_b);

  CHECK(recognize_real(0.0)->to_surd().is_zero());
}

TEST_CASE("recognition round-trips random quadratic surds") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 24);
  std::uniform_int_distribution<int> rad(2, 60);
  for (int trial = 0; trial < 200; ++trial) {
    Rat p(num(rng), den(rng)), q(num(rng), den(rng));
    std::int64_t r = rad(rng);
    SurdSum v = SurdSum(p) + SurdSum::surd(q, Int(r));
    auto rec = recognize_real(v.to_double());
    REQUIRE(rec);
    CHECK(rec->to_surd() == v);
  }
}
