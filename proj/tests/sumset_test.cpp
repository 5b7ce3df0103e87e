#include <gtest/gtest.h>

#include <random>

#include "starsum/json_io.hpp"
#include "starsum/sumset.hpp"

using namespace starsum;

namespace {

RationalField Q;

std::vector<ModP> mod_set(const PrimeField& f, std::initializer_list<long> vals) {
  std::vector<ModP> out;
  for (long v : vals) out.push_back(f.from_int(v));
  return out;
}

std::vector<Rational> rat_set(std::initializer_list<long> vals) {
  return std::vector<Rational>(vals.begin(), vals.end());
}

}  // namespace

TEST(Enumerate, SpecExamples) {
  PrimeField f7(7);
  SumsetProblem<PrimeField> prob{f7,
                                 {mod_set(f7, {0, 1}), mod_set(f7, {0, 1, 2})},
                                 {ConstraintSpec<PrimeField>::distinct()}};
  auto sums = enumerate_restricted_sumset(prob);
  EXPECT_EQ(sums, mod_set(f7, {1, 2, 3}));

  SumsetProblem<RationalField> prob2{
      Q,
      {rat_set({0, 1, 2}), rat_set({0, 1, 2})},
      {ConstraintSpec<RationalField>::distinct(),
       ConstraintSpec<RationalField>::congruent_apart(0, 1, 5, {0, 0})}};
  auto sums2 = enumerate_restricted_sumset(prob2);
  EXPECT_EQ(sums2, rat_set({1, 2, 3}));

  SumsetProblem<RationalField> singleton{Q, {rat_set({7}), rat_set({-2})}, {}};
  EXPECT_EQ(enumerate_restricted_sumset(singleton), rat_set({5}));
}

TEST(Enumerate, CapAndValidation) {
  PrimeField f7(7);
  SumsetProblem<PrimeField> prob{f7, {mod_set(f7, {0, 1, 2}), mod_set(f7, {0, 1, 2})}, {}};
  EXPECT_THROW(enumerate_restricted_sumset(prob, 8), cap_exceeded);

  SumsetProblem<PrimeField> dup{f7, {mod_set(f7, {0, 0})}, {}};
  EXPECT_THROW(enumerate_restricted_sumset(dup), std::invalid_argument);

  SumsetProblem<PrimeField> empty{f7, {std::vector<ModP>{}}, {}};
  EXPECT_THROW(enumerate_restricted_sumset(empty), std::invalid_argument);

  // congruence over a prime field is rejected as malformed
  SumsetProblem<PrimeField> bad{f7,
                                {mod_set(f7, {0, 1}), mod_set(f7, {0, 1})},
                                {ConstraintSpec<PrimeField>::congruent_apart(0, 1, 3, {0, 0})}};
  EXPECT_THROW(enumerate_restricted_sumset(bad), std::invalid_argument);
}

TEST(Enumerate, MonotoneUnderConstraints) {
  std::mt19937_64 rng(51);
  PrimeField f11(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 3), pick_k(1, 4);
    const int n = pick_n(rng);
    SumsetProblem<PrimeField> base{f11, {}, {}};
    for (int i = 0; i < n; ++i) {
      std::set<long> vals;
      std::uniform_int_distribution<long> v(0, 10);
      int k = pick_k(rng);
      while (static_cast<int>(vals.size()) < k) vals.insert(v(rng));
      std::vector<ModP> s;
      for (long x : vals) s.push_back(f11.from_int(x));
      base.sets.push_back(std::move(s));
    }
    auto unrestricted = enumerate_restricted_sumset(base);
    auto restricted = base;
    restricted.constraints.push_back(ConstraintSpec<PrimeField>::distinct());
    std::uniform_int_distribution<long> v(0, 10);
    restricted.constraints.push_back(
        ConstraintSpec<PrimeField>::diff_avoid_between(0, 1, {f11.from_int(v(rng))}));
    auto smaller = enumerate_restricted_sumset(restricted);
    EXPECT_TRUE(std::includes(unrestricted.begin(), unrestricted.end(), smaller.begin(), smaller.end()));
  }
}

TEST(BoundFor, SpecExamples) {
  EXPECT_EQ(bound_for(ResultId::anr, {{2, 3}, 7, 0}), 3);
  EXPECT_EQ(bound_for(ResultId::thm1_1, {{2, 3}, 11, 1}), 3);
  EXPECT_EQ(bound_for(ResultId::thm1_3, {{3, 3}, std::nullopt, 0}), 2);
  EXPECT_EQ(bound_for(ResultId::cd, {{2, 3}, 3, 0}), 3);  // clamped by p
  EXPECT_EQ(bound_for(ResultId::cd, {{2, 3}, std::nullopt, 0}), 4);
  EXPECT_EQ(bound_for(ResultId::dh, {{3, 3}, 11, 0}), 2 * 3 - 4 + 1);
  EXPECT_EQ(bound_for(ResultId::hs, {{4, 4}, 11, 1}), (4 - 1 - 1) * 2 + 1);
  EXPECT_THROW(parse_result_id("nope"), std::invalid_argument);
  EXPECT_EQ(parse_result_id("iii"), ResultId::anr);
  EXPECT_EQ(parse_result_id("thm1.3"), ResultId::thm1_3);
}

TEST(CheckBound, Theorem11Example) {
  PrimeField f11(11);
  SumsetProblem<PrimeField> prob{
      f11,
      {mod_set(f11, {0, 1}), mod_set(f11, {0, 1, 2})},
      {ConstraintSpec<PrimeField>::diff_avoid_between(0, 1, {f11.zero()})}};
  CheckParams cp;
  cp.m = 1;
  auto rep = check_bound(prob, ResultId::thm1_1, cp);
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_EQ(rep.claimed_bound, 3);
  EXPECT_GE(rep.actual_cardinality, 3);
  EXPECT_TRUE(rep.pass);
}

TEST(CheckBound, Theorem11GuardTrips) {
  PrimeField f5(5);
  SumsetProblem<PrimeField> prob{
      f5,
      {mod_set(f5, {0, 1}), mod_set(f5, {0, 1, 2})},
      {ConstraintSpec<PrimeField>::diff_avoid_between(0, 1, {f5.zero(), f5.from_int(1)})}};
  CheckParams cp;
  cp.m = 1;
  auto rep = check_bound(prob, ResultId::thm1_1, cp);
  EXPECT_FALSE(rep.hypotheses_met);  // |S_12| = 2 is not < 2m = 2
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.reasons.empty());
}

TEST(CheckBound, Theorem13Example) {
  SumsetProblem<RationalField> prob{
      Q,
      {rat_set({0, 1, 2}), rat_set({0, 1, 2})},
      {ConstraintSpec<RationalField>::scaled({Rational(1), Rational(1)}),
       ConstraintSpec<RationalField>::congruent_apart(0, 1, 5, {0, 0})}};
  auto rep = check_bound(prob, ResultId::thm1_3);
  EXPECT_TRUE(rep.hypotheses_met) << (rep.reasons.empty() ? "" : rep.reasons.front());
  EXPECT_TRUE(rep.strict);
  EXPECT_EQ(rep.claimed_bound, 2);
  EXPECT_EQ(rep.actual_cardinality, 3);
  EXPECT_TRUE(rep.pass);
}

TEST(CheckBound, Theorem13RejectsSmallModulus) {
  SumsetProblem<RationalField> prob{
      Q,
      {rat_set({0, 1, 2}), rat_set({0, 1, 2})},
      {ConstraintSpec<RationalField>::scaled({Rational(1), Rational(1)}),
       ConstraintSpec<RationalField>::congruent_apart(0, 1, 4, {0, 0})}};
  auto rep = check_bound(prob, ResultId::thm1_3);
  EXPECT_FALSE(rep.hypotheses_met);  // m_12 = 4 is not > 2*max|x_i-x_j| = 4
}

TEST(CheckBound, CauchyDavenportAndFriends) {
  PrimeField f7(7);
  SumsetProblem<PrimeField> cd{f7, {mod_set(f7, {0, 1}), mod_set(f7, {0, 3, 5})}, {}};
  auto rep = check_bound(cd, ResultId::cd);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.claimed_bound, 4);

  SumsetProblem<PrimeField> dh{f7,
                               {mod_set(f7, {0, 1, 3}), mod_set(f7, {0, 1, 3})},
                               {ConstraintSpec<PrimeField>::distinct()}};
  auto rep2 = check_bound(dh, ResultId::dh);
  EXPECT_TRUE(rep2.pass);
  EXPECT_EQ(rep2.claimed_bound, 3);

  SumsetProblem<PrimeField> anr{f7,
                                {mod_set(f7, {0, 1}), mod_set(f7, {0, 1, 3})},
                                {ConstraintSpec<PrimeField>::distinct()}};
  auto rep3 = check_bound(anr, ResultId::anr);
  EXPECT_TRUE(rep3.pass);
  EXPECT_EQ(rep3.claimed_bound, 3);

  // anr hypothesis needs strictly increasing sizes
  SumsetProblem<PrimeField> flat{f7,
                                 {mod_set(f7, {0, 1}), mod_set(f7, {2, 3})},
                                 {ConstraintSpec<PrimeField>::distinct()}};
  EXPECT_FALSE(check_bound(flat, ResultId::anr).hypotheses_met);
}

TEST(CheckBound, PolynomialImageResults) {
  PrimeField f13(13);
  auto x = UnivariatePoly<PrimeField>(f13, {f13.zero(), f13.one()});
  // monic quadratics x^2 + c
  auto p1 = x * x + UnivariatePoly<PrimeField>::constant(f13, f13.from_int(1));
  auto p2 = x * x + UnivariatePoly<PrimeField>::constant(f13, f13.from_int(2));
  SumsetProblem<PrimeField> ls{f13,
                               {mod_set(f13, {0, 1, 2, 4, 6}), mod_set(f13, {0, 1, 2, 3, 5})},
                               {ConstraintSpec<PrimeField>::poly_images({p1, p2})}};
  auto rep = check_bound(ls, ResultId::ls);
  EXPECT_TRUE(rep.hypotheses_met) << (rep.reasons.empty() ? "" : rep.reasons.front());
  EXPECT_EQ(rep.claimed_bound, (5 - 1) * 2 - 3 + 1);
  EXPECT_TRUE(rep.pass);

  // su: adds pairwise distinctness, non-monic leading coefficients with
  // nonvanishing permanent of (b_j^{i-1})
  auto q1 = x.scaled(f13.from_int(2));  // 2x
  auto q2 = x.scaled(f13.from_int(3));  // 3x
  SumsetProblem<PrimeField> su{f13,
                               {mod_set(f13, {0, 1, 2}), mod_set(f13, {0, 1, 5})},
                               {ConstraintSpec<PrimeField>::distinct(),
                                ConstraintSpec<PrimeField>::poly_images({q1, q2})}};
  auto rep2 = check_bound(su, ResultId::su);
  EXPECT_TRUE(rep2.hypotheses_met) << (rep2.reasons.empty() ? "" : rep2.reasons.front());
  EXPECT_EQ(rep2.claimed_bound, (3 - 1) * 2 - 2 + 1);
  EXPECT_TRUE(rep2.pass);
}

TEST(CheckBound, DifferenceSetResult) {
  PrimeField f13(13);
  SumsetProblem<PrimeField> hs{
      f13,
      {mod_set(f13, {0, 1, 4}), mod_set(f13, {2, 5, 7})},
      {ConstraintSpec<PrimeField>::diff_avoid_between(0, 1, {f13.from_int(1), f13.from_int(3)})}};
  CheckParams cp;
  cp.m = 1;
  auto rep = check_bound(hs, ResultId::hs, cp);
  EXPECT_TRUE(rep.hypotheses_met) << (rep.reasons.empty() ? "" : rep.reasons.front());
  EXPECT_EQ(rep.claimed_bound, (3 - 1 - 1) * 2 + 1);
  EXPECT_TRUE(rep.pass);
}

TEST(CheckBound, Theorem12Cyclotomic) {
  CyclotomicField f9(9);
  SumsetProblem<CyclotomicField> prob{f9, {}, {}};
  for (int i = 0; i < 2; ++i)
    prob.sets.push_back({f9.embed(Rational(0)), f9.embed(Rational(1)), f9.embed(Rational(3))});
  auto sc = ConstraintSpec<CyclotomicField>::scaled({f9.root(0), f9.root(1)});
  sc.zeta_exps = {0, 1};
  prob.constraints.push_back(sc);
  prob.constraints.push_back(
      ConstraintSpec<CyclotomicField>::diff_avoid_between(0, 1, {f9.embed(Rational(1))}));
  CheckParams cp;
  cp.m = 1;
  auto rep = check_bound(prob, ResultId::thm1_2, cp);
  EXPECT_TRUE(rep.hypotheses_met) << (rep.reasons.empty() ? "" : rep.reasons.front());
  EXPECT_EQ(rep.claimed_bound, (3 - 1 - 1) * 2 + 1);
  EXPECT_TRUE(rep.pass);

  // even q is rejected
  CyclotomicField f4(4);
  SumsetProblem<CyclotomicField> even{f4, {{f4.embed(Rational(0))}}, {}};
  EXPECT_FALSE(check_bound(even, ResultId::thm1_2, cp).hypotheses_met);
}

TEST(BalancedResidue, ExamplesAndCongruenceEquivalence) {
  EXPECT_EQ(balanced_residue(7, 5), 2);
  EXPECT_EQ(balanced_residue(-7, 5), -2);
  EXPECT_EQ(balanced_residue(3, 6), 3);    // upper endpoint m/2 included
  EXPECT_EQ(balanced_residue(-3, 6), 3);
  EXPECT_EQ(balanced_residue(10, 5), 0);

  // with |x_i - x_j| < m/2: x_i + b_i = x_j + b_j mod m iff
  // x_j - x_i equals the balanced residue of b_i - b_j
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> b(-30, 30), x(-2, 2);
  for (int trial = 0; trial < 500; ++trial) {
    long m = 9 + 2 * (trial % 5);  // m > 8 = 2*max|x_i - x_j|
    long bi = b(rng), bj = b(rng), xi = x(rng), xj = x(rng);
    bool cong = ((xi + bi) - (xj + bj)) % m == 0;
    EXPECT_EQ(cong, xj - xi == balanced_residue(bi - bj, m));
  }
}

TEST(Lemma11, SpecExamples) {
  auto x1 = MultiPoly<RationalField>::variable(Q, 2, 0);
  auto x2 = MultiPoly<RationalField>::variable(Q, 2, 1);

  auto r = lemma11_lower_bound(x2 - x1, {rat_set({0, 1}), rat_set({0, 1, 2})});
  EXPECT_EQ(r.coefficient, Rational(1));
  ASSERT_TRUE(r.bound.has_value());
  EXPECT_EQ(*r.bound, 3);

  auto r2 = lemma11_lower_bound(MultiPoly<RationalField>::one(Q, 2),
                                {rat_set({0, 1}), rat_set({0, 1, 2})});
  ASSERT_TRUE(r2.bound.has_value());
  EXPECT_EQ(*r2.bound, 2 + 3 - 1);

  // [x1 x2] (x1-x2)(x1+x2) = 0: the antisymmetric factor contributes no
  // bound on a square grid
  auto r3 = lemma11_lower_bound(x1 - x2, {rat_set({0, 1}), rat_set({0, 1})});
  EXPECT_EQ(r3.coefficient, Rational(0));
  EXPECT_FALSE(r3.bound.has_value());

  // [x2^2] (x1-x2)(x1+x2) = -1: nonzero, bound 2
  auto r4 = lemma11_lower_bound(x1 - x2, {rat_set({0}), rat_set({0, 1, 2})});
  EXPECT_EQ(r4.coefficient, Rational(-1));
  ASSERT_TRUE(r4.bound.has_value());
  EXPECT_EQ(*r4.bound, 2);

  EXPECT_THROW(lemma11_lower_bound(MultiPoly<RationalField>(Q, 2),
                                   {rat_set({0}), rat_set({0})}),
               std::invalid_argument);
  EXPECT_THROW(lemma11_lower_bound(x1.pow(4), {rat_set({0, 1}), rat_set({0, 1})}),
               std::invalid_argument);
}

// Whenever the driver produces a bound for constraints of the shape
// "P(a) != 0", the enumerated restricted sumset is at least that big.
TEST(Lemma11, ConsistentWithEnumeration) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 3), pick_k(2, 4);
    const int n = pick_n(rng);

    // rational instance, P = prod_{i<j} (x_j - x_i)  <=>  pairwise distinct
    {
      SumsetProblem<RationalField> prob{Q, {}, {ConstraintSpec<RationalField>::distinct()}};
      for (int i = 0; i < n; ++i) {
        std::set<long> vals;
        std::uniform_int_distribution<long> v(-6, 6);
        int k = pick_k(rng);
        while (static_cast<int>(vals.size()) < k) vals.insert(v(rng));
        prob.sets.push_back({});
        for (long x : vals) prob.sets.back().push_back(Rational(x));
      }
      auto res = lemma11_lower_bound(build_difference_product(Q, n, 1), prob.sets);
      if (res.bound) {
        auto sums = enumerate_restricted_sumset(prob);
        EXPECT_GE(static_cast<long>(sums.size()), *res.bound);
      }
    }

    // prime-field instance, P = prod_{i<j} prod_{c in S_ij} (x_i - x_j - c)
    {
      PrimeField f13(13);
      SumsetProblem<PrimeField> prob{f13, {}, {}};
      for (int i = 0; i < n; ++i) {
        std::set<long> vals;
        std::uniform_int_distribution<long> v(0, 12);
        int k = pick_k(rng);
        while (static_cast<int>(vals.size()) < k) vals.insert(v(rng));
        prob.sets.push_back({});
        for (long x : vals) prob.sets.back().push_back(f13.from_int(x));
      }
      auto poly = MultiPoly<PrimeField>::one(f13, n);
      std::uniform_int_distribution<long> c(0, 12);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          long avoid = c(rng);
          prob.constraints.push_back(
              ConstraintSpec<PrimeField>::diff_avoid_between(i, j, {f13.from_int(avoid)}));
          auto xi = MultiPoly<PrimeField>::variable(f13, n, i);
          auto xj = MultiPoly<PrimeField>::variable(f13, n, j);
          poly = poly * (xi - xj - MultiPoly<PrimeField>::constant(f13, n, f13.from_int(avoid)));
        }
      long slack = 0;
      for (const auto& s : prob.sets) slack += static_cast<long>(s.size()) - 1;
      if (poly.degree() > slack) continue;
      auto res = lemma11_lower_bound(poly, prob.sets);
      if (res.bound) {
        auto sums = enumerate_restricted_sumset(prob);
        EXPECT_GE(static_cast<long>(sums.size()), *res.bound);
      }
    }
  }
}

TEST(JsonIo, ProblemRoundTrip) {
  auto j = json::parse(R"({
    "ring": {"kind": "prime", "p": 11},
    "sets": [[0, 1], [0, 1, 2]],
    "constraints": [{"kind": "diff_avoid", "i": 1, "j": 2, "S": [0]}]
  })");
  auto any = parse_problem(j);
  auto& prob = std::get<SumsetProblem<PrimeField>>(any);
  EXPECT_EQ(prob.field.p(), 11);
  EXPECT_EQ(prob.n(), 2);
  EXPECT_EQ(prob.constraints.size(), 1u);
  CheckParams cp;
  cp.m = 1;
  EXPECT_TRUE(check_bound(prob, ResultId::thm1_1, cp).pass);

  auto jr = json::parse(R"({
    "ring": {"kind": "rational"},
    "sets": [["1/2", 1], [0, "3"]],
    "constraints": [{"kind": "pairwise_distinct"},
                    {"kind": "scaled_distinct", "alphas": ["2", "1/3"]}]
  })");
  auto rat = std::get<SumsetProblem<RationalField>>(parse_problem(jr));
  EXPECT_EQ(rat.sets[0][0], Rational(1, 2));
  EXPECT_EQ(rat.constraints[1].scale[1], Rational(1, 3));

  auto jc = json::parse(R"({
    "ring": {"kind": "cyclotomic", "q": 3},
    "sets": [[["1", "0"], 2]],
    "constraints": [{"kind": "scaled_distinct", "zeta_exps": [1]}]
  })");
  auto cyc = std::get<SumsetProblem<CyclotomicField>>(parse_problem(jc));
  EXPECT_EQ(cyc.sets[0][0], CyclotomicField(3).one());
  EXPECT_EQ(cyc.constraints[0].scale[0], cyclo_root_pow(3, 1));

  EXPECT_THROW(parse_problem(json::parse(R"({"ring": {"kind": "weird"}, "sets": [[1]]})")),
               std::invalid_argument);
  EXPECT_THROW(parse_problem(json::parse(
                   R"({"ring": {"kind": "prime", "p": 7}, "sets": [[0]],
                       "constraints": [{"kind": "diff_avoid", "i": 0, "j": 1, "S": []}]})")),
               std::invalid_argument);
}
