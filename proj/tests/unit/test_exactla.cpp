#include <gtest/gtest.h>

#include <random>

#include "dense_oracle.hpp"
#include "ncbtt/exactla/elimination.hpp"

using namespace ncbtt::exactla;

namespace {

SparseMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::mt19937_64& rng,
                           bool fractions = false) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> val(-4, 4), den(1, 3);
  SparseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (u(rng) < density) m.set(r, c, fractions ? Scalar(val(rng), den(rng)) : Scalar(val(rng)));
  return m;
}

// Low-rank product of two random factors.
SparseMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t k, std::mt19937_64& rng) {
  auto a = random_matrix(rows, k, 0.6, rng), b = random_matrix(k, cols, 0.6, rng);
  SparseMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<Scalar> x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = b.at(i, c);
    auto y = a.apply(x);
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, y[r]);
  }
  return m;
}

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(Scalar::parse("6/4").str(), "3/2");
  EXPECT_EQ(Scalar::parse("-2").str(), "-2");
  EXPECT_EQ(Scalar::parse("0/5").str(), "0");
  EXPECT_THROW(Scalar::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("x"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("1/-2"), std::invalid_argument);
  EXPECT_EQ((Scalar(1, 3) + Scalar(1, 6)).str(), "1/2");
}

TEST(Scalar, FieldSelector) {
  EXPECT_TRUE(Field::parse("Q").is_rational());
  EXPECT_EQ(Field::parse("fp:7").characteristic, 7u);
  EXPECT_THROW(Field::parse("Fp:9"), std::invalid_argument);
  EXPECT_THROW(Field::parse("R"), std::invalid_argument);
  EXPECT_EQ(Field::prime(7).normalize(Scalar(-1, 2)).str(), "3");
  EXPECT_THROW(to_residue(Scalar(1, 7), 7), std::domain_error);
}

TEST(Rank, ZeroAndIdentity) {
  EXPECT_EQ(rank(SparseMatrix(3, 3)), 0u);
  EXPECT_EQ(rank(SparseMatrix::identity(4)), 4u);
  EXPECT_EQ(rank(SparseMatrix::identity(4), Field::prime(5)), 4u);
}

TEST(Rank, MatchesDenseOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + rng() % 25, c = 1 + rng() % 25;
    auto m = (t % 3 == 0) ? low_rank(r, c, 1 + rng() % 4, rng) : random_matrix(r, c, 0.3, rng, t % 2);
    EXPECT_EQ(rank(m), oracle::dense_rank(m)) << "trial " << t;
  }
}

TEST(Rank, PrimeFieldMatchesModularOracle) {
  std::mt19937_64 rng(12);
  for (std::uint64_t p : {2ull, 3ull, 7ull, 65521ull}) {
    for (int t = 0; t < 10; ++t) {
      auto m = random_matrix(1 + rng() % 20, 1 + rng() % 20, 0.4, rng);
      EXPECT_EQ(rank(m, Field::prime(p)), oracle::dense_rank_mod(m, p)) << "p=" << p;
    }
  }
}

TEST(Rank, RankPlusNullityIsColumnCount) {
  std::mt19937_64 rng(13);
  for (std::size_t n : {10, 50, 120, 200}) {
    auto m = (n % 20 == 0) ? low_rank(n, n, n / 3, rng) : random_matrix(n, n, 4.0 / n, rng);
    EXPECT_EQ(rank(m) + nullspace(m).size(), m.cols()) << n;
  }
}

TEST(Nullspace, VectorsAreKernelVectors) {
  std::mt19937_64 rng(14);
  auto m = low_rank(15, 20, 5, rng);
  auto ker = nullspace(m);
  EXPECT_EQ(ker.size(), 20 - rank(m));
  for (const auto& x : ker) EXPECT_TRUE(all_zero(m.apply(x)));
}

TEST(Solve, IdentityReturnsTarget) {
  std::vector<Scalar> v{Scalar(1), Scalar(-2), Scalar(1, 3)};
  auto x = solve(SparseMatrix::identity(3), v);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, v);
}

TEST(Solve, ZeroMatrixNonzeroTarget) {
  EXPECT_FALSE(solve(SparseMatrix(2, 3), {Scalar(0), Scalar(1)}));
}

TEST(Solve, KnownPreimage) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 20; ++t) {
    auto m = low_rank(12, 9, 1 + rng() % 6, rng);
    std::vector<Scalar> x0(9);
    for (auto& s : x0) s = Scalar(static_cast<long>(rng() % 7) - 3);
    auto v = m.apply(x0);
    auto x = solve(m, v);
    ASSERT_TRUE(x);
    EXPECT_EQ(m.apply(*x), v);
  }
}

TEST(Solve, DimensionMismatch) {
  EXPECT_THROW(solve(SparseMatrix(2, 2), {Scalar(1)}), std::invalid_argument);
}

TEST(Certificate, ZeroSystemHasZeroSolution) {
  auto r = cobound_certificate(SparseMatrix(3, 2), std::vector<Scalar>(3));
  ASSERT_TRUE(std::holds_alternative<Solution>(r));
  EXPECT_TRUE(all_zero(std::get<Solution>(r).x));
}

TEST(Certificate, OutsideImageGivesVerifiedFunctional) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 25; ++t) {
    auto m = low_rank(10, 8, 1 + rng() % 5, rng);
    std::vector<Scalar> v(10);
    for (auto& s : v) s = Scalar(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 2));
    auto r = cobound_certificate(m, v);
    if (auto* s = std::get_if<Solution>(&r)) {
      EXPECT_EQ(m.apply(s->x), v);
    } else {
      const auto& f = std::get<Certificate>(r).f;
      EXPECT_TRUE(all_zero(m.apply_left(f)));
      EXPECT_FALSE(dot(f, v).is_zero());
    }
  }
}

TEST(Certificate, PrimeFieldBranches) {
  const std::uint64_t p = 101;
  std::mt19937_64 rng(17);
  auto m = low_rank(9, 7, 3, rng);
  std::vector<Scalar> x0(7, Scalar(1));
  auto inside = m.apply(x0);
  auto r = cobound_certificate(m, inside, Field::prime(p));
  ASSERT_TRUE(std::holds_alternative<Solution>(r));
  auto y = m.apply(std::get<Solution>(r).x);
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_EQ(to_residue(y[i] - inside[i], p), 0u);

  std::vector<Scalar> outside(9);
  outside[0] = Scalar(1);
  auto c = cobound_certificate(m, outside, Field::prime(p));
  if (auto* cert = std::get_if<Certificate>(&c)) {
    for (const auto& s : m.apply_left(cert->f)) EXPECT_EQ(to_residue(s, p), 0u);
    EXPECT_NE(to_residue(dot(cert->f, outside), p), 0u);
  }
}

TEST(PivotColumns, FirstIndependentColumns) {
  SparseMatrix m(2, 4);
  m.set(0, 1, Scalar(2));
  m.set(0, 2, Scalar(4));
  m.set(1, 3, Scalar(1));
  EXPECT_EQ(pivot_columns(m), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(pivot_columns(m, Field::prime(3)), (std::vector<std::size_t>{1, 3}));
}
