#include <gtest/gtest.h>

#include <random>

#include "starsum/matrix.hpp"
#include "starsum/reference.hpp"

using namespace starsum;

namespace {

RationalField Q;

Matrix<Rational> rmat(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> out;
  for (auto& r : rows) out.emplace_back(r.begin(), r.end());
  return Matrix<Rational>(std::move(out));
}

}  // namespace

TEST(Matrix, DeterminantExamples) {
  Matrix<Rational> id3(3, Rational(0));
  for (int i = 0; i < 3; ++i) id3.at(i, i) = Rational(1);
  EXPECT_EQ(determinant(id3), Rational(1));

  EXPECT_EQ(determinant(rmat({{1, 2}, {3, 4}})), Rational(-2));

  // Vandermonde (x_j^{i-1}) at (1,2,3): (2-1)(3-1)(3-2) = 2
  EXPECT_EQ(determinant(rmat({{1, 1, 1}, {1, 2, 3}, {1, 4, 9}})), Rational(2));
}

TEST(Matrix, PermanentExamples) {
  EXPECT_EQ(permanent(rmat({{1, 1}, {1, 1}})), Rational(2));
  EXPECT_EQ(permanent(rmat({{1, 2}, {3, 4}})), Rational(10));

  CyclotomicField f3(3);
  Matrix<Cyclotomic> m(2, f3.one());
  m.at(1, 1) = cyclo_root_pow(3, 1);  // rows (z_t^{s-1}) for roots (1, z_3)
  Cyclotomic per = permanent(m);
  EXPECT_EQ(per, f3.one() + cyclo_root_pow(3, 1));
  EXPECT_FALSE(cyclo_is_zero(per));
}

TEST(Matrix, AgreesWithNaiveExpansion) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> pick_n(1, 6);
    const int n = pick_n(rng);
    Matrix<Rational> a(n, Rational(0));
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = Rational(num(rng), den(rng));
    EXPECT_EQ(determinant(a), naive_determinant(a));
    EXPECT_EQ(permanent(a), naive_permanent(a));

    PrimeField f7(7);
    Matrix<ModP> b(n, f7.zero());
    std::uniform_int_distribution<long> v(0, 6);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.at(i, j) = f7.from_int(v(rng));
    EXPECT_EQ(determinant(b), naive_determinant(b));
    EXPECT_EQ(permanent(b), naive_permanent(b));
  }
}

TEST(Matrix, RyserMatchesNaiveOverCyclotomics) {
  std::mt19937_64 rng(37);
  CyclotomicField f9(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> pick_n(1, 4);
    std::uniform_int_distribution<long> k(0, 8), s(-2, 2);
    const int n = pick_n(rng);
    Matrix<Cyclotomic> m(n, f9.zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = cyclo_root_pow(9, k(rng)) + f9.from_int(s(rng));
    EXPECT_EQ(permanent(m), naive_permanent(m));
    EXPECT_EQ(determinant(m), naive_determinant(m));
  }
}

TEST(Matrix, PermutationSymmetries) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 5);
    const int n = pick_n(rng);
    Matrix<Rational> a(n, Rational(0));
    std::uniform_int_distribution<long> num(-4, 4);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = Rational(num(rng));

    std::uniform_int_distribution<int> pick(0, n - 1);
    int r1 = pick(rng), r2 = pick(rng);
    Matrix<Rational> swapped = a;
    for (int j = 0; j < n; ++j) std::swap(swapped.at(r1, j), swapped.at(r2, j));
    EXPECT_EQ(permanent(swapped), permanent(a));
    if (r1 != r2) EXPECT_EQ(determinant(swapped), -determinant(a));

    Matrix<Rational> col_swapped = a;
    for (int i = 0; i < n; ++i) std::swap(col_swapped.at(i, r1), col_swapped.at(i, r2));
    EXPECT_EQ(permanent(col_swapped), permanent(a));
  }
}

TEST(Matrix, MonomialMatrixDetExamples) {
  Matrix<Rational> ones(2, Rational(1));
  auto f = monomial_matrix_det(Q, ones, {0, 1});
  auto x1 = MultiPoly<RationalField>::variable(Q, 2, 0), x2 = MultiPoly<RationalField>::variable(Q, 2, 1);
  EXPECT_EQ(f, x2 - x1);

  Matrix<Rational> id2(2, Rational(0));
  id2.at(0, 0) = id2.at(1, 1) = Rational(1);
  EXPECT_EQ(monomial_matrix_det(Q, id2, {0, 0}), MultiPoly<RationalField>::one(Q, 2));

  // rows (1,1) and (a1,a2): det(a_ij x_j^{m_i}) with m=(0,1) is a2*x2 - a1*x1
  Matrix<Rational> a(2, Rational(1));
  a.at(1, 0) = Rational(5);
  a.at(1, 1) = Rational(7);
  EXPECT_EQ(monomial_matrix_det(Q, a, {0, 1}), x2.scaled(Rational(7)) - x1.scaled(Rational(5)));

  EXPECT_THROW(monomial_matrix_det(Q, ones, {0, 1, 2}), std::invalid_argument);
}

TEST(Matrix, RootsPermanentExamples) {
  auto r1 = roots_permanent_nonzero(1, {0});
  EXPECT_TRUE(r1.nonzero);
  EXPECT_EQ(r1.value, CyclotomicField(1).one());

  auto r3 = roots_permanent_nonzero(3, {0, 1});
  EXPECT_TRUE(r3.nonzero);
  EXPECT_EQ(r3.value, CyclotomicField(3).one() + cyclo_root_pow(3, 1));

  EXPECT_TRUE(roots_permanent_nonzero(9, {0, 1, 2}).nonzero);

  EXPECT_THROW(roots_permanent_nonzero(4, {0, 1}), std::invalid_argument);   // even q
  EXPECT_THROW(roots_permanent_nonzero(5, {1, 6}), std::invalid_argument);   // repeated mod q
}

TEST(Matrix, RootsPermanentExhaustiveSmall) {
  for (long q : {3L, 5L, 7L, 9L}) {
    for (int n = 1; n <= 3 && n <= q; ++n) {
      std::vector<long> comb(n);
      for (int i = 0; i < n; ++i) comb[i] = i;
      while (true) {
        EXPECT_TRUE(roots_permanent_nonzero(q, comb).nonzero) << "q=" << q;
        int i = n - 1;
        while (i >= 0 && comb[i] == q - n + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
  }
}
