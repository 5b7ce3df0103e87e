#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starsum/identities.hpp"
#include "starsum/permutations.hpp"
#include "starsum/reference.hpp"
#include "starsum/sumset.hpp"

namespace starsum {

// The exhaustive/randomized verification suite behind the `suite`
// subcommand. Every check is exact; a criterion fails on the first
// violation and its detail carries the counterexample.

struct SuiteOptions {
  int max_n = 4;        // upper bound on the arity ranges below
  std::uint64_t seed = 12345;
  long cap = 10'000'000;
};

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  long checks = 0;      // individual assertions performed
  std::string detail;   // counterexample dump on failure
  double seconds = 0.0;
};

namespace suite_detail {

class Runner {
 public:
  explicit Runner(std::string name) : name_(std::move(name)) {}

  // Records one exact check; on the first failure captures the dump.
  void check(bool ok, const std::string& dump) {
    ++checks_;
    if (!ok && pass_) {
      pass_ = false;
      detail_ = dump;
    }
  }
  bool still_passing() const { return pass_; }

  CriterionResult finish(int index, double seconds) const {
    CriterionResult r;
    r.index = index;
    r.name = name_;
    r.pass = pass_;
    r.checks = checks_;
    r.detail = pass_ ? std::to_string(checks_) + " checks" : detail_;
    r.seconds = seconds;
    return r;
  }

 private:
  std::string name_;
  bool pass_ = true;
  long checks_ = 0;
  std::string detail_;
};

inline Rational random_rational(std::mt19937_64& rng, long num_range = 5, long den_max = 3) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_max);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long num_range = 5, long den_max = 3) {
  while (true) {
    Rational r = random_rational(rng, num_range, den_max);
    if (!r.is_zero()) return r;
  }
}

inline Matrix<Rational> random_rational_matrix(std::mt19937_64& rng, int n) {
  Matrix<Rational> a(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = random_rational(rng, 3, 2);
  return a;
}

inline std::vector<long> random_mod_subset(std::mt19937_64& rng, long p, long k) {
  std::vector<long> all(p);
  for (long i = 0; i < p; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

inline std::vector<Rational> random_distinct_rationals(std::mt19937_64& rng, int k, long range) {
  std::set<Rational> out;
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 2);
  while (static_cast<int>(out.size()) < k) out.insert(Rational(num(rng), den(rng)));
  return {out.begin(), out.end()};
}

inline std::vector<long long> random_distinct_integers(std::mt19937_64& rng, int k, long range) {
  std::set<long long> out;
  std::uniform_int_distribution<long long> v(-range, range);
  while (static_cast<int>(out.size()) < k) out.insert(v(rng));
  return {out.begin(), out.end()};
}

template <typename F>
std::string dump_problem(const SumsetProblem<F>& prob, const BoundReport& rep) {
  std::ostringstream os;
  os << "counterexample to " << rep.result_id << ": claimed " << rep.claimed_bound
     << (rep.strict ? " (strict)" : "") << ", actual " << rep.actual_cardinality << "; sets:";
  for (const auto& s : prob.sets) {
    os << " {";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << prob.field.to_string(s[i]);
    os << "}";
  }
  if (!rep.reasons.empty()) {
    os << "; unmet:";
    for (const auto& r : rep.reasons) os << " [" << r << "]";
  }
  return os.str();
}

}  // namespace suite_detail

// Criterion 1: every identity in the catalog verified against its
// expansion oracle across the documented parameter grid.
inline CriterionResult criterion_identity_catalog(const SuiteOptions& opt) {
  using namespace suite_detail;
  auto t0 = std::chrono::steady_clock::now();
  Runner run("identity catalog vs expansion oracles");
  std::mt19937_64 rng(opt.seed ^ 0x1dull);
  const int max_n = std::max(1, std::min(opt.max_n, 4));

  auto report = [&](IdentityId id, const IdentityParams& p) {
    auto rep = verify_identity(id, p, 80);
    std::ostringstream os;
    os << "identity " << to_string(id) << " n=" << p.n << ": lhs=" << rep.lhs << " rhs=" << rep.rhs;
    run.check(rep.pass, os.str());
  };

  for (int n = 1; n <= max_n; ++n) {
    std::uniform_int_distribution<long> mval(0, 5);
    // eq2.2 and eq2.3: random m-vectors, random rational matrices
    for (int trial = 0; trial < 20; ++trial) {
      IdentityParams p;
      p.n = n;
      p.m_vec.resize(n);
      for (auto& m : p.m_vec) m = mval(rng);
      p.delta = static_cast<int>(rng() % 2);
      p.A = random_rational_matrix(rng, n);
      report(IdentityId::eq2_2, p);
      IdentityParams q;
      q.n = n;
      q.m_vec = p.m_vec;
      report(IdentityId::eq2_3, q);
    }
    for (long m = 1; m <= 2; ++m) {
      IdentityParams p;
      p.n = n;
      p.m = m;
      report(IdentityId::eq2_4, p);
      report(IdentityId::eq2_5, p);
      report(IdentityId::hs3_1, p);
      IdentityParams pa = p;
      pa.a_vec.resize(n);
      for (auto& a : pa.a_vec) a = random_rational(rng, 3, 2);
      report(IdentityId::eq2_6, pa);
      report(IdentityId::eq2_8, p);
      for (long k = m * (n - 1) + 1; k <= 9; ++k) {
        IdentityParams pk = p;
        pk.k = k;
        report(IdentityId::eq2_7, pk);
      }
    }
    // dyson: all m-vectors with entries <= 2
    {
      IdentityParams p;
      p.n = n;
      p.m_vec.assign(n, 0);
      while (true) {
        report(IdentityId::dyson, p);
        int i = n - 1;
        while (i >= 0 && p.m_vec[i] == 2) p.m_vec[i--] = 0;
        if (i < 0) break;
        ++p.m_vec[i];
      }
    }
    // thm2.1: random instances, P in {1, V_n, V_n^2}
    if (n <= 3) {
      RationalField field;
      std::uniform_int_distribution<long> mexp(0, 3);
      for (int trial = 0; trial < 6; ++trial) {
        IdentityParams p;
        p.n = n;
        p.m_vec.resize(n);
        for (auto& m : p.m_vec) m = mexp(rng);
        p.A = random_rational_matrix(rng, n);
        for (int which = 0; which < 3; ++which) {
          p.P = build_difference_product(field, n, which);
          report(IdentityId::thm2_1, p);
        }
      }
    }
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run.finish(1, dt);
}

// Criterion 2: coeff_via_star against the direct-expansion coefficient
// for random homogeneous polynomials.
inline CriterionResult criterion_lemma21_oracle(const SuiteOptions& opt) {
  using namespace suite_detail;
  auto t0 = std::chrono::steady_clock::now();
  Runner run("coeff_via_star vs direct expansion");
  std::mt19937_64 rng(opt.seed ^ 0x2bull);
  RationalField field;
  const int max_n = std::max(1, std::min(opt.max_n, 4));

  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> pick_n(1, max_n);
    std::uniform_int_distribution<int> pick_deg(0, 6);
    const int n = pick_n(rng);
    const int deg = pick_deg(rng);
    MultiPoly<RationalField> p(field, n);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> nterms(1, 6);
    while (p.is_zero()) {
      for (int t = nterms(rng); t > 0; --t) {
        Monomial mono(n, 0);  // random composition of deg into n parts
        int rest = deg;
        for (int i = 0; i + 1 < n; ++i) {
          std::uniform_int_distribution<int> part(0, rest);
          mono[i] = part(rng);
          rest -= mono[i];
        }
        mono[n - 1] = rest;
        int c = coef(rng);
        if (c != 0) p.add_term(std::move(mono), Rational(c));
      }
    }
    std::vector<long> k(n);
    long ktotal = 0;
    do {
      ktotal = 0;
      std::uniform_int_distribution<long> kv(0, 6);
      for (auto& ki : k) ktotal += (ki = kv(rng));
    } while (ktotal < p.degree());

    auto fast = coeff_via_star(p, k);
    auto expanded = p * variable_sum(field, n).pow(static_cast<unsigned>(ktotal - p.degree()));
    Monomial target(k.begin(), k.end());
    auto direct = expanded.coefficient_of(target);
    std::ostringstream os;
    os << "P=" << p.to_string() << " k=(";
    for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    os << "): star route " << fast.to_string() << ", direct " << direct.to_string();
    run.check(fast == direct, os.str());
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run.finish(2, dt);
}

// Criterion 3: frozen spot values, each re-confirmed by its oracle.
inline CriterionResult criterion_spot_values(const SuiteOptions&) {
  using namespace suite_detail;
  auto t0 = std::chrono::steady_clock::now();
  Runner run("closed-form spot values");
  RationalField field;
  {
    IdentityParams p;
    p.n = 2;
    p.m = 2;
    auto v = closed_form(IdentityId::eq2_8, p);
    run.check(v.value == UnivariatePoly<RationalField>::constant(field, Rational(-3)),
              "eq2.8(n=2,m=2) = " + v.to_string() + ", expected -3");
    run.check(verify_identity(IdentityId::eq2_8, p).pass, "eq2.8(n=2,m=2) oracle mismatch");
  }
  {
    IdentityParams p;
    p.n = 2;
    p.m_vec = {1, 1};
    auto v = closed_form(IdentityId::dyson, p);
    run.check(v.value == UnivariatePoly<RationalField>::constant(field, Rational(-2)),
              "dyson(n=2,m=(1,1)) = " + v.to_string() + ", expected -2");
    run.check(verify_identity(IdentityId::dyson, p).pass, "dyson(n=2,m=(1,1)) oracle mismatch");
  }
  {
    IdentityParams p;
    p.n = 2;
    p.m = 1;
    auto v = closed_form(IdentityId::hs3_1, p);
    UnivariatePoly<RationalField> expect(field, {Rational(0), Rational(-2)});  // -2x
    run.check(v.value == expect, "hs3.1(n=2,m=1) = " + v.to_string() + ", expected -2*x");
    run.check(verify_identity(IdentityId::hs3_1, p).pass, "hs3.1(n=2,m=1) oracle mismatch");
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run.finish(3, dt);
}

// Criterion 4: the sumset bound suites. Bounds are checked under met
// hypotheses only; any violation fails the criterion with a dump.
inline CriterionResult criterion_sumset_bounds(const SuiteOptions& opt) {
  using namespace suite_detail;
  auto t0 = std::chrono::steady_clock::now();
  Runner run("sumset bound suites");
  std::mt19937_64 rng(opt.seed ^ 0x4dull);

  auto expect_pass = [&](const auto& prob, ResultId rid, const CheckParams& cp) {
    auto rep = check_bound(prob, rid, cp, opt.cap);
    run.check(rep.pass, dump_problem(prob, rep));
    return rep.pass;
  };

  // (cd) unrestricted sumsets, all size profiles with bounded product
  for (long p : {3L, 5L, 7L}) {
    PrimeField field(p);
    for (int n = 1; n <= std::min(3, opt.max_n); ++n) {
      std::vector<long> profile(n, 1);
      while (true) {
        long prod = 1;
        for (long k : profile) prod *= k;
        if (prod <= 500) {
          SumsetProblem<PrimeField> prob{field, {}, {}};
          for (int i = 0; i < n; ++i) {
            std::vector<ModP> s;
            for (long v : random_mod_subset(rng, p, profile[i])) s.push_back(field.from_int(v));
            prob.sets.push_back(std::move(s));
          }
          if (!expect_pass(prob, ResultId::cd, {})) break;
        }
        int i = n - 1;
        while (i >= 0 && profile[i] == p) profile[i--] = 1;
        if (i < 0) break;
        ++profile[i];
      }
      if (!run.still_passing()) break;
    }
  }

  // (dh) distinct-element sums, exhaustive over subsets |A| <= 4
  for (long p : {5L, 7L, 11L}) {
    PrimeField field(p);
    for (int n = 2; n <= std::min(3, opt.max_n); ++n) {
      for (long size = 1; size <= 4 && run.still_passing(); ++size) {
        std::vector<int> comb(size);
        for (long i = 0; i < size; ++i) comb[i] = static_cast<int>(i);
        while (true) {
          std::vector<ModP> a;
          for (int v : comb) a.push_back(field.from_int(v));
          SumsetProblem<PrimeField> prob{field, std::vector<std::vector<ModP>>(n, a),
                                         {ConstraintSpec<PrimeField>::distinct()}};
          if (!expect_pass(prob, ResultId::dh, {})) break;
          long i = size - 1;
          while (i >= 0 && comb[i] == p - size + i) --i;
          if (i < 0) break;
          ++comb[i];
          for (long j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
      }
    }
  }

  // (anr) strictly increasing size profiles, randomized
  for (long p : {7L, 11L}) {
    PrimeField field(p);
    for (int n = 2; n <= std::min(3, opt.max_n); ++n) {
      for (int trial = 0; trial < 100 && run.still_passing(); ++trial) {
        auto sizes = random_mod_subset(rng, p, n);  // n distinct values in [0,p)
        std::sort(sizes.begin(), sizes.end());
        for (auto& k : sizes) ++k;  // distinct sizes in [1,p]
        if (sizes.back() > p) continue;
        SumsetProblem<PrimeField> prob{field, {}, {ConstraintSpec<PrimeField>::distinct()}};
        for (int i = 0; i < n; ++i) {
          std::vector<ModP> s;
          for (long v : random_mod_subset(rng, p, sizes[i])) s.push_back(field.from_int(v));
          prob.sets.push_back(std::move(s));
        }
        expect_pass(prob, ResultId::anr, {});
      }
    }
  }

  // (thm1.1) staircase sets with difference-avoidance, m = 1, exhaustive in k
  for (long p : {7L, 11L, 13L}) {
    PrimeField field(p);
    for (int n = 2; n <= std::min(3, opt.max_n); ++n) {
      for (long k = n; k <= p && run.still_passing(); ++k) {
        if (!(p > std::max<long>(1 * n, (k - 1) * n - 1 * n * (n - 1)))) continue;
        if (k > p) continue;  // sets must fit in Z/p
        for (int trial = 0; trial < 50 && run.still_passing(); ++trial) {
          SumsetProblem<PrimeField> prob{field, {}, {}};
          bool ok = true;
          for (int i = 0; i < n; ++i) {
            long ki = k - n + 1 + i;
            if (ki < 1 || ki > p) ok = false;
            if (ok) {
              std::vector<ModP> s;
              for (long v : random_mod_subset(rng, p, ki)) s.push_back(field.from_int(v));
              prob.sets.push_back(std::move(s));
            }
          }
          if (!ok) break;
          std::uniform_int_distribution<int> coin(0, 1);
          std::uniform_int_distribution<long> val(0, p - 1);
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
              if (coin(rng))
                prob.constraints.push_back(ConstraintSpec<PrimeField>::diff_avoid_between(
                    i, j, {field.from_int(val(rng))}));
          CheckParams cp;
          cp.m = 1;
          expect_pass(prob, ResultId::thm1_1, cp);
        }
      }
    }
  }

  // (thm1.2) roots-of-unity scaling over Q(zeta_q), m = 1, all root choices
  for (long q : {3L, 5L, 7L, 9L}) {
    CyclotomicField field(q);
    for (int n = 2; n <= std::min(3, opt.max_n) && n <= q; ++n) {
      for (long k = 2; k <= 4 && run.still_passing(); ++k) {
        std::vector<int> comb(n);
        for (int i = 0; i < n; ++i) comb[i] = i;
        while (run.still_passing()) {
          SumsetProblem<CyclotomicField> prob{field, {}, {}};
          for (int i = 0; i < n; ++i) {
            std::vector<Cyclotomic> s;
            for (const auto& r : random_distinct_rationals(rng, static_cast<int>(k), 6))
              s.push_back(field.embed(r));
            prob.sets.push_back(std::move(s));
          }
          std::vector<long> exps(comb.begin(), comb.end());
          std::vector<Cyclotomic> mult;
          for (long e : exps) mult.push_back(field.root(e));
          auto sc = ConstraintSpec<CyclotomicField>::scaled(std::move(mult));
          sc.zeta_exps = exps;
          prob.constraints.push_back(std::move(sc));
          std::uniform_int_distribution<int> coin(0, 1);
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
              if (coin(rng))
                prob.constraints.push_back(ConstraintSpec<CyclotomicField>::diff_avoid_between(
                    i, j, {field.embed(random_rational(rng, 4, 2))}));
          CheckParams cp;
          cp.m = 1;
          expect_pass(prob, ResultId::thm1_2, cp);
          int i = n - 1;
          while (i >= 0 && comb[i] == q - n + i) --i;
          if (i < 0) break;
          ++comb[i];
          for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
        }
      }
    }
  }

  // (thm1.3) positive scaling plus congruence avoidance over Z
  {
    RationalField field;
    const int n_hi = std::max(2, std::min(3, opt.max_n));
    for (int trial = 0; trial < 100 && run.still_passing(); ++trial) {
      std::uniform_int_distribution<int> pick_n(2, n_hi);
      std::uniform_int_distribution<long> pick_k(1, 5);
      std::uniform_int_distribution<long> pick_b(-10, 10);
      const int n = pick_n(rng);
      const long k = pick_k(rng);
      SumsetProblem<RationalField> prob{field, {}, {}};
      for (int i = 0; i < n; ++i) {
        std::vector<Rational> s;
        for (long long v : random_distinct_integers(rng, static_cast<int>(k), 8))
          s.push_back(Rational(static_cast<long>(v)));
        prob.sets.push_back(std::move(s));
      }
      std::vector<Rational> alphas;
      for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<long> num(1, 5), den(1, 3);
        alphas.push_back(Rational(num(rng), den(rng)));
      }
      prob.constraints.push_back(ConstraintSpec<RationalField>::scaled(std::move(alphas)));
      std::vector<long> b(n);
      for (auto& v : b) v = pick_b(rng);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          long widest = 0;
          for (const auto& xi : prob.sets[i])
            for (const auto& xj : prob.sets[j])
              widest = std::max<long>(widest,
                                      std::labs(xi.numerator().get_si() - xj.numerator().get_si()));
          prob.constraints.push_back(
              ConstraintSpec<RationalField>::congruent_apart(i, j, 2 * widest + 1, b));
        }
      expect_pass(prob, ResultId::thm1_3, {});
    }
  }

  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run.finish(4, dt);
}

// Criterion 5: permutation searches, exhaustive.
inline CriterionResult criterion_permutation_searches(const SuiteOptions&) {
  using namespace suite_detail;
  auto t0 = std::chrono::steady_clock::now();
  Runner run("permutation searches");

  auto dump_b = [](long m, int n, const std::vector<long>& b) {
    std::ostringstream os;
    os << "m=" << m << " n=" << n << " b=(";
    for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ")";
    return os.str();
  };

  // Snevily permutations: all b for every m <= 7, n <= (m+1)/2
  for (long m = 1; m <= 7; ++m) {
    for (int n = 1; 2 * n <= m + 1; ++n) {
      std::vector<long> b(n, 0);
      while (run.still_passing()) {
        auto sigma = snevily_permutation(m, n, b);
        bool ok = sigma.has_value();
        if (ok) {
          std::vector<bool> seen(m, false);
          for (int i = 0; i < n; ++i) {
            long r = ((i + 1 + b[(*sigma)[i] - 1]) % m + m) % m;
            if (seen[r]) ok = false;
            seen[r] = true;
          }
        }
        run.check(ok, "snevily: " + dump_b(m, n, b));
        int i = n - 1;
        while (i >= 0 && b[i] == m - 1) b[i--] = 0;
        if (i < 0) break;
        ++b[i];
      }
    }
  }

  // Hall permutations: all b with sum 0 mod n, n <= 6
  for (int n = 1; n <= 6; ++n) {
    std::vector<long> a(n);
    for (int i = 0; i < n; ++i) a[i] = i;
    std::vector<long> b(n, 0);
    while (run.still_passing()) {
      long sum = 0;
      for (long v : b) sum += v;
      if (sum % n == 0) {
        auto sigma = hall_permutation(n, a, b);
        bool ok = sigma.has_value();
        if (ok) {
          std::vector<bool> seen(n, false);
          for (int i = 0; i < n; ++i) {
            long r = ((a[i] + b[(*sigma)[i] - 1]) % n + n) % n;
            if (seen[r]) ok = false;
            seen[r] = true;
          }
        }
        run.check(ok, "hall: " + dump_b(n, n, b));
      }
      int i = n - 1;
      while (i >= 0 && b[i] == n - 1) b[i--] = 0;
      if (i < 0) break;
      ++b[i];
    }
  }

  // Parker decompositions: all admissible b with b_n = 0, n <= 6
  for (int n = 2; n <= 6; ++n) {
    std::vector<long> b(n, 0);
    while (run.still_passing()) {
      long sum = 0;
      for (long v : b) sum += v;
      if (sum % n == 0) {
        bool ok = true;
        std::string why;
        try {
          parker_decomposition(n, b);  // validates internally
        } catch (const std::exception& e) {
          ok = false;
          why = e.what();
        }
        run.check(ok, "parker: " + dump_b(n, n, b) + " (" + why + ")");
      }
      int i = n - 2;  // b_n stays 0
      while (i >= 0 && b[i] == n - 1) b[i--] = 0;
      if (i < 0) break;
      ++b[i];
    }
  }

  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run.finish(5, dt);
}

// Criterion 6: permanents/determinants against naive expansions, and
// the root-permanent nonvanishing scan.
inline CriterionResult criterion_permanent_determinant(const SuiteOptions& opt) {
  using namespace suite_detail;
  auto t0 = std::chrono::steady_clock::now();
  Runner run("permanent/determinant vs naive expansion");
  std::mt19937_64 rng(opt.seed ^ 0x6cull);

  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> pick_n(1, 6);
    const int n = pick_n(rng);
    Matrix<Rational> a = random_rational_matrix(rng, n);
    run.check(permanent(a) == naive_permanent(a), "rational permanent mismatch at n=" + std::to_string(n));
    run.check(determinant(a) == naive_determinant(a),
              "rational determinant mismatch at n=" + std::to_string(n));
    PrimeField f7(7);
    Matrix<ModP> b(n, f7.zero());
    std::uniform_int_distribution<long> v(0, 6);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.at(i, j) = f7.from_int(v(rng));
    run.check(permanent(b) == naive_permanent(b), "mod-7 permanent mismatch at n=" + std::to_string(n));
    run.check(determinant(b) == naive_determinant(b),
              "mod-7 determinant mismatch at n=" + std::to_string(n));
  }

  for (long q : {3L, 5L, 7L, 9L}) {
    for (int n = 1; n <= 3 && n <= q; ++n) {
      std::vector<long> comb(n);
      for (int i = 0; i < n; ++i) comb[i] = i;
      while (run.still_passing()) {
        auto res = roots_permanent_nonzero(q, comb);
        std::ostringstream os;
        os << "roots permanent vanished: q=" << q << " exps=(";
        for (int i = 0; i < n; ++i) os << (i ? "," : "") << comb[i];
        os << ")";
        run.check(res.nonzero, os.str());
        int i = n - 1;
        while (i >= 0 && comb[i] == q - n + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
  }

  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run.finish(6, dt);
}

inline std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opt = {}) {
  return {criterion_identity_catalog(opt),    criterion_lemma21_oracle(opt),
          criterion_spot_values(opt),         criterion_sumset_bounds(opt),
          criterion_permutation_searches(opt), criterion_permanent_determinant(opt)};
}

}  // namespace starsum
