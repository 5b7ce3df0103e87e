#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starsum/errors.hpp"
#include "starsum/matrix.hpp"
#include "starsum/star.hpp"

namespace starsum {

// Catalog of closed-form star-transform identities. Everything here is
// computed over Q, exactly.
enum class IdentityId { eq2_2, eq2_3, eq2_4, eq2_5, eq2_6, eq2_7, eq2_8, hs3_1, thm2_1, dyson };

inline const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::eq2_2: return "eq2.2";
    case IdentityId::eq2_3: return "eq2.3";
    case IdentityId::eq2_4: return "eq2.4";
    case IdentityId::eq2_5: return "eq2.5";
    case IdentityId::eq2_6: return "eq2.6";
    case IdentityId::eq2_7: return "eq2.7";
    case IdentityId::eq2_8: return "eq2.8";
    case IdentityId::hs3_1: return "hs3.1";
    case IdentityId::thm2_1: return "thm2.1";
    default: return "dyson";
  }
}

inline IdentityId parse_identity_id(const std::string& s) {
  if (s == "eq2.2") return IdentityId::eq2_2;
  if (s == "eq2.3") return IdentityId::eq2_3;
  if (s == "eq2.4") return IdentityId::eq2_4;
  if (s == "eq2.5") return IdentityId::eq2_5;
  if (s == "eq2.6") return IdentityId::eq2_6;
  if (s == "eq2.7") return IdentityId::eq2_7;
  if (s == "eq2.8") return IdentityId::eq2_8;
  if (s == "hs3.1") return IdentityId::hs3_1;
  if (s == "thm2.1") return IdentityId::thm2_1;
  if (s == "dyson") return IdentityId::dyson;
  throw std::invalid_argument("unknown identity id \"" + s + "\"");
}

// Parameter bundle; each identity uses the subset its schema names.
struct IdentityParams {
  int n = 0;
  std::vector<long> m_vec;                      // eq2.2, eq2.3, thm2.1, dyson
  long m = 0;                                   // eq2.4 .. eq2.8, hs3.1
  long k = 0;                                   // eq2.7
  int delta = 0;                                // eq2.2
  std::optional<Matrix<Rational>> A;            // eq2.2, thm2.1
  std::vector<Rational> a_vec;                  // eq2.6
  std::optional<MultiPoly<RationalField>> P;    // thm2.1
};

// Either a univariate polynomial in x or a scalar (kept as a constant
// polynomial with is_scalar set).
struct IdentityValue {
  UnivariatePoly<RationalField> value;
  bool is_scalar;

  std::string to_string() const { return value.to_string(); }
};

namespace detail {

inline Rational rat_pow_sign(long exponent) {  // (-1)^exponent
  return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
}

inline long choose2(long n) { return n * (n - 1) / 2; }

inline void require(bool ok, const std::string& why) {
  if (!ok) throw hypothesis_error(why);
}

inline void need_n(const IdentityParams& p) {
  if (p.n < 1) throw std::invalid_argument("identity params: n must be >= 1");
}

inline std::vector<long> mvec_checked(const IdentityParams& p) {
  if (static_cast<int>(p.m_vec.size()) != p.n)
    throw std::invalid_argument("identity params: m-vector must have length n");
  for (long m : p.m_vec)
    if (m < 0) throw std::invalid_argument("identity params: m-vector entries must be nonnegative");
  return p.m_vec;
}

inline const Matrix<Rational>& matrix_checked(const IdentityParams& p) {
  if (!p.A || p.A->n() != p.n) throw std::invalid_argument("identity params: need an n x n matrix A");
  return *p.A;
}

// m!(2m)!...(nm)! / (m!)^n as an exact rational.
inline Rational factorial_ladder(long n, long m) {
  mpz_class num = 1;
  for (long t = 1; t <= n; ++t) num *= factorial(t * m);
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), factorial(m).get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(num, den);
}

// prod_i (x)_{tops_i} / prod_i (x)_{bots_i} by exact univariate
// division; the quotient is required to be a polynomial.
inline UnivariatePoly<RationalField> falling_factorial_quotient(const std::vector<long>& tops,
                                                                const std::vector<long>& bots) {
  RationalField field;
  auto num = UnivariatePoly<RationalField>::constant(field, Rational(1));
  for (long t : tops) num = num * falling_factorial_poly(field, t);
  auto den = UnivariatePoly<RationalField>::constant(field, Rational(1));
  for (long b : bots) den = den * falling_factorial_poly(field, b);
  try {
    return num.divide_exact(den);
  } catch (const std::domain_error&) {
    throw hypothesis_error("falling-factorial quotient has a nonzero remainder");
  }
}

}  // namespace detail

// The right-hand side of the identity, computed exactly from its
// closed form. Out-of-range parameters raise hypothesis_error.
inline IdentityValue closed_form(IdentityId id, const IdentityParams& p) {
  using detail::choose2;
  using detail::factorial_ladder;
  using detail::falling_factorial_quotient;
  using detail::rat_pow_sign;
  RationalField field;
  detail::need_n(p);
  const long n = p.n;
  auto constant = [&](const Rational& v) {
    return IdentityValue{UnivariatePoly<RationalField>::constant(field, v), true};
  };

  switch (id) {
    case IdentityId::eq2_2: {
      // prod_{i<j}(m_i - m_j)^delta * prod_i (x)_{m_i} * (det A | per A)
      auto m = detail::mvec_checked(p);
      const auto& a = detail::matrix_checked(p);
      if (p.delta != 0 && p.delta != 1) throw std::invalid_argument("eq2.2: delta must be 0 or 1");
      Rational scalar(1);
      if (p.delta == 1)
        for (long i = 0; i < n; ++i)
          for (long j = i + 1; j < n; ++j) scalar = scalar * Rational(m[i] - m[j]);
      scalar = scalar * (p.delta == 0 ? determinant(a) : permanent(a));
      auto poly = UnivariatePoly<RationalField>::constant(field, scalar);
      for (long i = 0; i < n; ++i) poly = poly * falling_factorial_poly(field, m[i]);
      return {poly, false};
    }
    case IdentityId::eq2_3: {
      // prod_{i<j}(m_j - m_i) * prod_i (x)_{m_i} / (x)_{i-1}
      auto m = detail::mvec_checked(p);
      Rational scalar(1);
      for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) scalar = scalar * Rational(m[j] - m[i]);
      if (scalar.is_zero()) return {UnivariatePoly<RationalField>(field), false};
      std::vector<long> bots(n);
      for (long i = 0; i < n; ++i) bots[i] = i;
      return {falling_factorial_quotient(m, bots).scaled(scalar), false};
    }
    case IdentityId::eq2_4: {
      // 1!2!...(n-1)! m^{n(n-1)/2} * prod_i (x)_{(i-1)m} / (x)_{i-1}
      if (p.m < 1) throw hypothesis_error("eq2.4: m must be a positive integer");
      mpz_class super = 1;
      for (long t = 1; t < n; ++t) super *= factorial(t);
      mpz_class mp;
      mpz_pow_ui(mp.get_mpz_t(), mpz_class(p.m).get_mpz_t(), static_cast<unsigned long>(choose2(n)));
      std::vector<long> tops(n), bots(n);
      for (long i = 0; i < n; ++i) {
        tops[i] = i * p.m;
        bots[i] = i;
      }
      return {falling_factorial_quotient(tops, bots).scaled(Rational(mpz_class(super * mp))), false};
    }
    case IdentityId::eq2_5: {
      // (-1)^{(m-1)C(n,2)} ladder/n! * prod_r (x)_{rm} / (x)_r
      if (p.m < 1) throw hypothesis_error("eq2.5: m must be a positive integer");
      Rational scalar = rat_pow_sign((p.m - 1) * choose2(n)) * factorial_ladder(n, p.m) /
                        Rational(factorial(n));
      std::vector<long> tops(n), bots(n);
      for (long r = 0; r < n; ++r) {
        tops[r] = r * p.m;
        bots[r] = r;
      }
      return {falling_factorial_quotient(tops, bots).scaled(scalar), false};
    }
    case IdentityId::eq2_6: {
      // (-1)^{m C(n,2)} ladder/n! * per(a_j^{i-1}) * prod_r (x)_{rm}
      if (p.m < 1) throw hypothesis_error("eq2.6: m must be a positive integer");
      if (static_cast<long>(p.a_vec.size()) != n)
        throw std::invalid_argument("eq2.6: a-vector must have length n");
      Matrix<Rational> powers(static_cast<int>(n), Rational(1));
      for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j) powers.at(i, j) = powers.at(i - 1, j) * p.a_vec[j];
      Rational scalar = rat_pow_sign(p.m * choose2(n)) * factorial_ladder(n, p.m) /
                        Rational(factorial(n)) * permanent(powers);
      auto poly = UnivariatePoly<RationalField>::constant(field, scalar);
      for (long r = 0; r < n; ++r) poly = poly * falling_factorial_poly(field, r * p.m);
      return {poly, false};
    }
    case IdentityId::eq2_7: {
      // (-1)^{(m-1)C(n,2)} ladder/n! * (ln)! / prod_r (k-1-rm)!  with
      // l = k-1-m(n-1)
      if (p.m < 1) throw hypothesis_error("eq2.7: m must be a positive integer");
      detail::require(p.k > p.m * (n - 1), "eq2.7: requires k > m(n-1)");
      const long l = p.k - 1 - p.m * (n - 1);
      Rational v = rat_pow_sign((p.m - 1) * choose2(n)) * factorial_ladder(n, p.m) /
                   Rational(factorial(n)) * Rational(factorial(l * n));
      for (long r = 0; r < n; ++r) v = v / Rational(factorial(p.k - 1 - r * p.m));
      return constant(v);
    }
    case IdentityId::eq2_8: {
      // (-1)^{(m-1)C(n,2)} (mn)! / ((m!)^n n!)
      if (p.m < 1) throw hypothesis_error("eq2.8: m must be a positive integer");
      mpz_class den;
      mpz_pow_ui(den.get_mpz_t(), factorial(p.m).get_mpz_t(), static_cast<unsigned long>(n));
      den *= factorial(n);
      return constant(rat_pow_sign((p.m - 1) * choose2(n)) * Rational(factorial(p.m * n), den));
    }
    case IdentityId::hs3_1: {
      // (-1)^{m C(n,2)} ladder * prod_r (x)_{rm}
      if (p.m < 1) throw hypothesis_error("hs3.1: m must be a positive integer");
      Rational scalar = rat_pow_sign(p.m * choose2(n)) * factorial_ladder(n, p.m);
      auto poly = UnivariatePoly<RationalField>::constant(field, scalar);
      for (long r = 0; r < n; ++r) poly = poly * falling_factorial_poly(field, r * p.m);
      return {poly, false};
    }
    case IdentityId::thm2_1: {
      // P*(x - m_1, ..., x - m_n) * prod_i (x)_{m_i} * (det A | per A),
      // det for symmetric P, per for antisymmetric P.
      auto m = detail::mvec_checked(p);
      const auto& a = detail::matrix_checked(p);
      if (!p.P || p.P->arity() != n) throw std::invalid_argument("thm2.1: need a polynomial P of arity n");
      detail::require(p.P->is_homogeneous(), "thm2.1: P must be homogeneous");
      Symmetry sig = symmetry_signature(*p.P);
      detail::require(sig != Symmetry::neither,
                      "thm2.1: P must be symmetric or antisymmetric under all transpositions");
      Rational mult = (sig == Symmetry::symmetric) ? determinant(a) : permanent(a);
      auto poly = star_shifted_diagonal(*p.P, m).scaled(mult);
      for (long i = 0; i < n; ++i) poly = poly * falling_factorial_poly(field, m[i]);
      return {poly, false};
    }
    case IdentityId::dyson: {
      // (-1)^{sum (j-1)m_j} (m_1+...+m_n)! / (m_1!...m_n!)
      auto m = detail::mvec_checked(p);
      long sign_exp = 0, total = 0;
      mpz_class den = 1;
      for (long j = 0; j < n; ++j) {
        sign_exp += j * m[j];
        total += m[j];
        den *= factorial(m[j]);
      }
      return constant(rat_pow_sign(sign_exp) * Rational(factorial(total), den));
    }
  }
  throw std::invalid_argument("unknown identity id");
}

struct IdentityReport {
  IdentityId id;
  std::string lhs;
  std::string rhs;
  bool pass;
};

namespace detail {

inline long total_of(const std::vector<long>& v) {
  long t = 0;
  for (long x : v) t += x;
  return t;
}

// Left-hand sides by brute expansion: build the defining polynomial,
// then apply the star transform (or read off a coefficient) directly.
inline IdentityValue identity_oracle(IdentityId id, const IdentityParams& p, long degree_cap) {
  RationalField field;
  const long n = p.n;
  auto staircase = [&] {  // shifts (n-1, n-2, ..., 0)
    std::vector<long> s(n);
    for (long i = 0; i < n; ++i) s[i] = n - 1 - i;
    return s;
  };
  auto zeros = [&] { return std::vector<long>(n, 0); };
  auto guard = [&](long degree) {
    if (degree > degree_cap)
      throw cap_exceeded("identity oracle: expansion degree " + std::to_string(degree) +
                         " exceeds cap " + std::to_string(degree_cap));
  };
  auto scalar = [&](const Rational& v) {
    return IdentityValue{UnivariatePoly<RationalField>::constant(field, v), true};
  };
  auto poly_value = [&](UnivariatePoly<RationalField> v) { return IdentityValue{std::move(v), false}; };

  switch (id) {
    case IdentityId::eq2_2: {
      auto m = mvec_checked(p);
      std::vector<int> mi(m.begin(), m.end());
      guard(total_of(m) + static_cast<long>(p.delta) * choose2(n));
      auto f = monomial_matrix_det(field, matrix_checked(p), mi);
      if (p.delta == 1) f = f * build_difference_product(field, static_cast<int>(n), 1);
      return poly_value(star_shifted_diagonal(f, zeros()));
    }
    case IdentityId::eq2_3: {
      auto m = mvec_checked(p);
      std::vector<int> mi(m.begin(), m.end());
      guard(total_of(m));
      Matrix<Rational> ones(static_cast<int>(n), Rational(1));
      auto f = monomial_matrix_det(field, ones, mi);
      return poly_value(star_shifted_diagonal(f, staircase()));
    }
    case IdentityId::eq2_4: {
      if (p.m < 1) throw hypothesis_error("eq2.4: m must be a positive integer");
      guard(p.m * choose2(n));
      auto f = MultiPoly<RationalField>::one(field, static_cast<int>(n));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto xm = [&](int v) {
            Monomial mono(n, 0);
            mono[v] = static_cast<int>(p.m);
            MultiPoly<RationalField> q(field, static_cast<int>(n));
            q.add_term(std::move(mono), Rational(1));
            return q;
          };
          f = f * (xm(j) - xm(i));
        }
      return poly_value(star_shifted_diagonal(f, staircase()));
    }
    case IdentityId::eq2_5: {
      if (p.m < 1) throw hypothesis_error("eq2.5: m must be a positive integer");
      guard((2 * p.m - 1) * choose2(n));
      auto f = build_difference_product(field, static_cast<int>(n), static_cast<int>(2 * p.m - 1));
      return poly_value(star_shifted_diagonal(f, staircase()));
    }
    case IdentityId::eq2_6: {
      if (p.m < 1) throw hypothesis_error("eq2.6: m must be a positive integer");
      if (static_cast<long>(p.a_vec.size()) != n)
        throw std::invalid_argument("eq2.6: a-vector must have length n");
      guard(2 * p.m * choose2(n));
      auto f = build_difference_product(field, static_cast<int>(n), static_cast<int>(2 * p.m - 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto scaled_var = [&](int v) {
            return MultiPoly<RationalField>::variable(field, static_cast<int>(n), v).scaled(p.a_vec[v]);
          };
          f = f * (scaled_var(j) - scaled_var(i));
        }
      return poly_value(star_shifted_diagonal(f, zeros()));
    }
    case IdentityId::eq2_7: {
      if (p.m < 1) throw hypothesis_error("eq2.7: m must be a positive integer");
      require(p.k > p.m * (n - 1), "eq2.7: requires k > m(n-1)");
      const long l = p.k - 1 - p.m * (n - 1);
      guard(l * n + (2 * p.m - 1) * choose2(n));
      auto f = build_difference_product(field, static_cast<int>(n), static_cast<int>(2 * p.m - 1)) *
               variable_sum(field, static_cast<int>(n)).pow(static_cast<unsigned>(l * n));
      Monomial target(n);
      for (long i = 0; i < n; ++i) target[i] = static_cast<int>(p.k - n + i);
      return scalar(f.coefficient_of(target));
    }
    case IdentityId::eq2_8: {
      if (p.m < 1) throw hypothesis_error("eq2.8: m must be a positive integer");
      guard((2 * p.m - 1) * choose2(n));
      auto f = build_difference_product(field, static_cast<int>(n), static_cast<int>(2 * p.m - 1));
      Monomial target(n);
      for (long i = 0; i < n; ++i) target[i] = static_cast<int>((p.m - 1) * (n - 1) + i);
      return scalar(f.coefficient_of(target));
    }
    case IdentityId::hs3_1: {
      if (p.m < 1) throw hypothesis_error("hs3.1: m must be a positive integer");
      guard(2 * p.m * choose2(n));
      auto f = build_difference_product(field, static_cast<int>(n), static_cast<int>(2 * p.m));
      return poly_value(star_shifted_diagonal(f, zeros()));
    }
    case IdentityId::thm2_1: {
      auto m = mvec_checked(p);
      std::vector<int> mi(m.begin(), m.end());
      if (!p.P || p.P->arity() != n) throw std::invalid_argument("thm2.1: need a polynomial P of arity n");
      guard(total_of(m) + p.P->degree());
      auto f = monomial_matrix_det(field, matrix_checked(p), mi) * *p.P;
      return poly_value(star_shifted_diagonal(f, zeros()));
    }
    case IdentityId::dyson: {
      auto m = mvec_checked(p);
      guard((n - 1) * total_of(m));
      auto f = MultiPoly<RationalField>::one(field, static_cast<int>(n));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto diff = MultiPoly<RationalField>::variable(field, static_cast<int>(n), i) -
                      MultiPoly<RationalField>::variable(field, static_cast<int>(n), j);
          f = f * diff.pow(static_cast<unsigned>(m[i] + m[j]));
        }
      Monomial target(n);
      for (long i = 0; i < n; ++i) target[i] = static_cast<int>(m[i] * (n - 1));
      return scalar(f.coefficient_of(target));
    }
  }
  throw std::invalid_argument("unknown identity id");
}

}  // namespace detail

// Checks the identity by computing both sides independently: the left
// by brute expansion plus the star transform, the right by the closed
// form. Passes only on exact equality.
inline IdentityReport verify_identity(IdentityId id, const IdentityParams& p, long degree_cap = 64) {
  detail::need_n(p);
  IdentityValue lhs = detail::identity_oracle(id, p, degree_cap);
  IdentityValue rhs = closed_form(id, p);
  return {id, lhs.to_string(), rhs.to_string(), lhs.value == rhs.value};
}

}  // namespace starsum
