#include <doctest.h>

#include <random>

#include "qrs/named_systems.hpp"
#include "qrs/root_system.hpp"

using namespace qrs;

namespace {

QuasiRootSystemData a2_symmetric() {
  // roots alpha1, alpha2, -alpha3 of the hexagon: all mutual products -2
  return QuasiRootSystemData::from_gram(2, {{4, -2, -2}, {-2, 4, -2}, {-2, -2, 4}});
}

// Gram reconstruction from an embedding must be exact.
void check_embedding(const QuasiRootSystemData& data) {
  auto emb = embed(data);
  const int p = data.positive_count();
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      SurdSum dot;
      for (int mu = 0; mu < data.dim; ++mu) dot += emb.coords[i][mu] * emb.coords[j][mu];
      CHECK(dot == SurdSum(Rat(data.gram[i][j])));
    }
}

}  // namespace

TEST_CASE("validate_gram accepts the A2 example") {
  CHECK(validate_gram(a2_symmetric()).ok());
}

TEST_CASE("validate_gram rejects a bad diagonal") {
  auto data = QuasiRootSystemData{1, {{3}}, {Length::Short}};
  data.lengths = {Length::Short};
  auto res = validate_gram(data);
  CHECK_FALSE(res.ok());
  CHECK(res.code == ValidationCode::BadDiagonal);
}

TEST_CASE("validate_gram rejects proportional roots") {
  auto data = QuasiRootSystemData::from_gram(1, {{4, 4}, {4, 4}});
  auto res = validate_gram(data);
  CHECK_FALSE(res.ok());
  CHECK(res.code == ValidationCode::ProportionalPair);
}

TEST_CASE("validate_gram rejects wrong rank and non-PSD data") {
  auto rank_short = QuasiRootSystemData::from_gram(2, {{4}});
  CHECK(validate_gram(rank_short).code == ValidationCode::WrongRank);

  // symmetric integer matrix with an admissible pattern but negative eigenvalue
  auto bad = QuasiRootSystemData::from_gram(3, {{4, -3, 3}, {-3, 4, 3}, {3, 3, 4}});
  auto res = validate_gram(bad);
  CHECK_FALSE(res.ok());
  CHECK(res.code == ValidationCode::NotPositiveSemidefinite);
}

TEST_CASE("off-diagonal bounds follow from Cauchy-Schwarz") {
  CHECK(max_offdiag(Length::Long, Length::Long) == 3);
  CHECK(max_offdiag(Length::Long, Length::Short) == 2);
  CHECK(max_offdiag(Length::Short, Length::Short) == 1);
}

TEST_CASE("embedding reproduces the Gram matrix exactly") {
  check_embedding(a2_symmetric());
  check_embedding(named_system("B_n", {.n = 2}));
  check_embedding(named_system("T2"));
  check_embedding(named_system("F4"));
}

TEST_CASE("A_3 embedding matches the chain coordinates") {
  auto data = named_system("A_n", {.n = 3});
  auto emb = embed(data);
  // simple roots come first; the frame is lower-triangular with the
  // documented surd entries
  CHECK(emb.coords[0][0] == SurdSum(2));
  CHECK(emb.coords[1][0] == SurdSum(-1));
  CHECK(emb.coords[1][1] == SurdSum::sqrt_of(Rat(3)));
  CHECK(emb.coords[2][1] == SurdSum(0) - SurdSum::sqrt_of(Rat(4, 3)));
  CHECK(emb.coords[2][2] == SurdSum::sqrt_of(Rat(8, 3)));
}

TEST_CASE("one-dimensional embedding") {
  auto data = QuasiRootSystemData::from_gram(1, {{4}});
  auto emb = embed(data);
  CHECK(emb.coords[0][0] == SurdSum(2));
}

TEST_CASE("degenerate five-root extension embeds with a dependent row") {
  GramMatrix g(5, std::vector<std::int64_t>(5, -1));
  for (int i = 0; i < 5; ++i) g[i][i] = 4;
  for (int i = 0; i < 4; ++i) {
    g[4][i] = 1;
    g[i][4] = 1;
  }
  auto data = QuasiRootSystemData::from_gram(4, g);
  REQUIRE(validate_gram(data).ok());
  auto emb = embed(data);
  for (int mu = 0; mu < 4; ++mu) {
    SurdSum sum;
    for (int i = 0; i < 4; ++i) sum += emb.coords[i][mu];
    CHECK(emb.coords[4][mu] == sum);
  }
}

TEST_CASE("embed throws on degenerate claimed dimension") {
  auto data = QuasiRootSystemData::from_gram(2, {{4}});
  CHECK_THROWS_AS(embed(data), DegenerateGram);
}

TEST_CASE("canonical form is invariant under signed permutations") {
  auto base = a2_symmetric();
  auto canon = canonicalize(base);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> sign(3);
    for (auto& s : sign) s = rng() % 2 ? 1 : -1;
    GramMatrix g(3, std::vector<std::int64_t>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        g[i][j] = sign[i] * sign[j] * base.gram[perm[i]][perm[j]];
    auto relabeled = QuasiRootSystemData::from_gram(2, g);
    CHECK(canonicalize(relabeled) == canon);
  }
}

TEST_CASE("canonicalization is idempotent") {
  auto canon = canonicalize(named_system("B_n", {.n = 3}));
  auto again = canonicalize(QuasiRootSystemData::from_gram(3, canon.gram_min));
  CHECK(again == canon);
}

TEST_CASE("B2 and T2 have distinct canonical forms") {
  CHECK_FALSE(canonicalize(named_system("B_n", {.n = 2})) == canonicalize(named_system("T2")));
}

TEST_CASE("I2 sign convention does not matter") {
  auto plus = QuasiRootSystemData::from_gram(2, {{4, 1}, {1, 4}});
  auto minus = QuasiRootSystemData::from_gram(2, {{4, -1}, {-1, 4}});
  CHECK(canonicalize(plus) == canonicalize(minus));
}

TEST_CASE("canonicalize respects its node budget") {
  CHECK_THROWS_AS(canonicalize(named_system("F4"), 10), BudgetExceeded);
}
