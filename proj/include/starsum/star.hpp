#pragma once

#include <stdexcept>
#include <vector>

#include "starsum/multipoly.hpp"
#include "starsum/unipoly.hpp"

namespace starsum {

// The falling-factorial transform P -> P* replaces each monomial
// prod_i x_i^{j_i} by prod_i (x_i)_{j_i}. These routines evaluate P*
// directly; nothing is re-expanded into the monomial basis.

// P*(args_1, ..., args_n).
template <typename F>
typename F::elem star_evaluate(const MultiPoly<F>& p, const std::vector<typename F::elem>& args) {
  if (static_cast<int>(args.size()) != p.arity())
    throw std::invalid_argument("star_evaluate: arity mismatch");
  const F& field = p.field();
  typename F::elem acc = field.zero();
  for (const auto& [mono, c] : p.terms()) {
    typename F::elem t = c;
    for (int i = 0; i < p.arity(); ++i)
      if (mono[i] > 0) t = t * falling_factorial_value(field, args[i], mono[i]);
    acc = acc + t;
  }
  return acc;
}

// The univariate polynomial P*(x - s_1, ..., x - s_n) =
// sum_terms c * prod_i (x - s_i)_{j_i}.
template <typename F>
UnivariatePoly<F> star_shifted_diagonal(const MultiPoly<F>& p, const std::vector<long>& shifts) {
  if (static_cast<int>(shifts.size()) != p.arity())
    throw std::invalid_argument("star_shifted_diagonal: arity mismatch");
  const F& field = p.field();
  UnivariatePoly<F> acc(field);
  for (const auto& [mono, c] : p.terms()) {
    auto term = UnivariatePoly<F>::constant(field, c);
    for (int i = 0; i < p.arity(); ++i)
      if (mono[i] > 0) term = term * shifted_falling_factorial_poly(field, shifts[i], mono[i]);
    acc = acc + term;
  }
  return acc;
}

// The coefficient of x_1^{k_1}...x_n^{k_n} in
// P * (x_1+...+x_n)^{k_1+...+k_n - deg P}, for homogeneous P with
// deg P <= sum k_i. Equals (K!/prod k_i!) P*(k_1,...,k_n) with
// K = sum k_i - deg P; computed termwise as
// sum_j c_j * K!/prod_i (k_i - j_i)!, an integer combination of the
// coefficients, so it is exact over every coefficient ring.
template <typename F>
typename F::elem coeff_via_star(const MultiPoly<F>& p, const std::vector<long>& k) {
  if (static_cast<int>(k.size()) != p.arity()) throw std::invalid_argument("coeff_via_star: arity mismatch");
  for (long ki : k)
    if (ki < 0) throw std::invalid_argument("coeff_via_star: negative exponent");
  const F& field = p.field();
  if (p.is_zero()) return field.zero();
  if (!p.is_homogeneous()) throw std::invalid_argument("coeff_via_star: polynomial is not homogeneous");
  long total = 0;
  for (long ki : k) total += ki;
  const long deg = p.degree();
  if (deg > total) throw std::invalid_argument("coeff_via_star: deg P exceeds sum of target exponents");
  const mpz_class k_fact = factorial(total - deg);
  typename F::elem acc = field.zero();
  for (const auto& [mono, c] : p.terms()) {
    mpz_class weight = k_fact;
    bool in_range = true;
    for (int i = 0; i < p.arity() && in_range; ++i) {
      long gap = k[i] - mono[i];
      if (gap < 0) {
        in_range = false;
      } else {
        mpz_class f = factorial(gap);
        mpz_divexact(weight.get_mpz_t(), weight.get_mpz_t(), f.get_mpz_t());
      }
    }
    if (in_range) acc = acc + c * field.from_integer(weight);
  }
  return acc;
}

}  // namespace starsum
