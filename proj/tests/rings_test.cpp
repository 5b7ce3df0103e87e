#include <gtest/gtest.h>

#include <random>

#include "starsum/rings.hpp"

using namespace starsum;

TEST(Rational, NormalizationAndArithmetic) {
  Rational a(2, 6);
  EXPECT_EQ(a.numerator(), 1);
  EXPECT_EQ(a.denominator(), 3);
  EXPECT_EQ(Rational(-4, -8), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(Rational(0).denominator(), 1);
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) * Rational(3, 5), Rational(1, 5));
  EXPECT_EQ(Rational(1, 3) / Rational(2, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_EQ(Rational::parse("-7/14"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("42"), Rational(42));
  EXPECT_EQ(Rational(-3, 4).to_string(), "-3/4");
  EXPECT_EQ(Rational(5).to_string(), "5");
}

TEST(ModP, InverseExamples) {
  PrimeField f7(7);
  EXPECT_EQ(modp_inv(f7.from_int(1)), f7.from_int(1));

  // brute-scan oracle: the b in 1..6 with 3b = 1 mod 7
  long expected = 0;
  for (long b = 1; b < 7; ++b)
    if (3 * b % 7 == 1) expected = b;
  EXPECT_EQ(expected, 5);
  EXPECT_EQ(modp_inv(f7.from_int(3)), f7.from_int(5));

  EXPECT_THROW(modp_inv(f7.zero()), std::domain_error);
}

TEST(ModP, FieldConstruction) {
  EXPECT_THROW(PrimeField(6), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  PrimeField f13(13);
  EXPECT_EQ(f13.from_int(-1).value(), 12);
  EXPECT_THROW(f13.from_int(2) + PrimeField(7).from_int(1), std::invalid_argument);
}

TEST(ModP, AgreesWithReducedRationalArithmetic) {
  PrimeField f11(11);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    ModP ra = f11.reduce(a), rb = f11.reduce(b);
    EXPECT_EQ(ra + rb, f11.reduce(a + b));
    EXPECT_EQ(ra * rb, f11.reduce(a * b));
    EXPECT_EQ(ra - rb, f11.reduce(a - b));
  }
  EXPECT_THROW(f11.reduce(Rational(1, 11)), std::domain_error);
}

TEST(Cyclotomic, PolynomialExamples) {
  auto phi1 = cyclotomic_polynomial(1);
  EXPECT_EQ(phi1, (std::vector<mpz_class>{-1, 1}));  // x - 1
  auto phi3 = cyclotomic_polynomial(3);
  EXPECT_EQ(phi3, (std::vector<mpz_class>{1, 1, 1}));  // x^2 + x + 1
  auto phi9 = cyclotomic_polynomial(9);
  EXPECT_EQ(phi9, (std::vector<mpz_class>{1, 0, 0, 1, 0, 0, 1}));  // x^6 + x^3 + 1
}

// naive dense integer polynomial product, test-side oracle
static std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a,
                                         const std::vector<mpz_class>& b) {
  std::vector<mpz_class> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

TEST(Cyclotomic, ProductOverDivisorsIsXqMinusOne) {
  for (long q = 1; q <= 30; ++q) {
    std::vector<mpz_class> prod{1};
    long degree_sum = 0;
    for (long d = 1; d <= q; ++d) {
      if (q % d != 0) continue;
      const auto& phi = cyclotomic_polynomial(d);
      degree_sum += static_cast<long>(phi.size()) - 1;
      prod = poly_mul_z(prod, phi);
    }
    std::vector<mpz_class> expect(q + 1, 0);
    expect[0] = -1;
    expect[q] = 1;
    EXPECT_EQ(prod, expect) << "q=" << q;
    EXPECT_EQ(degree_sum, q);
  }
}

TEST(Cyclotomic, RootPowExamples) {
  CyclotomicField f3(3);
  EXPECT_EQ(cyclo_root_pow(3, 0), f3.one());
  EXPECT_EQ(cyclo_root_pow(3, 3), f3.one());
  Cyclotomic z2 = cyclo_root_pow(3, 2);
  EXPECT_EQ(z2.coords(), (std::vector<Rational>{Rational(-1), Rational(-1)}));
}

TEST(Cyclotomic, RootPowIsHomomorphism) {
  for (long q = 1; q <= 15; ++q)
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b)
        EXPECT_EQ(cyclo_root_pow(q, a) * cyclo_root_pow(q, b), cyclo_root_pow(q, a + b))
            << "q=" << q << " a=" << a << " b=" << b;
}

TEST(Cyclotomic, ZeroTests) {
  CyclotomicField f3(3);
  EXPECT_TRUE(cyclo_is_zero(f3.zero()));
  Cyclotomic sum = f3.one() + cyclo_root_pow(3, 1) + cyclo_root_pow(3, 2);
  EXPECT_TRUE(cyclo_is_zero(sum));  // 1 + z + z^2 = 0
  EXPECT_FALSE(cyclo_is_zero(f3.one() + cyclo_root_pow(3, 1)));
  EXPECT_THROW(f3.one() + CyclotomicField(5).one(), std::invalid_argument);
}

TEST(Cyclotomic, ParseRoundTrip) {
  CyclotomicField f9(9);
  Cyclotomic e = cyclo_root_pow(9, 7) + f9.embed(Rational(1, 2));
  EXPECT_EQ(f9.parse(e.to_string()), e);
  EXPECT_EQ(f9.parse("3/2"), f9.embed(Rational(3, 2)));
}

// Ring axioms on random triples, all three rings, exact equality.
template <typename F, typename Gen>
static void check_ring_axioms(const F& field, Gen gen, int trials) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < trials; ++t) {
    auto a = gen(rng), b = gen(rng), c = gen(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_EQ(a * field.one(), a);
    EXPECT_EQ(a + field.zero(), a);
  }
}

TEST(Rings, AxiomsHoldOnRandomTriples) {
  RationalField fq;
  check_ring_axioms(fq, [](std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    return Rational(num(rng), den(rng));
  }, 100);

  PrimeField f13(13);
  check_ring_axioms(f13, [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<long> v(0, 12);
    return f13.from_int(v(rng));
  }, 100);

  CyclotomicField f9(9);
  check_ring_axioms(f9, [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<long> k(0, 8), s(-2, 2);
    return cyclo_root_pow(9, k(rng)) + f9.from_int(s(rng));
  }, 60);
}
