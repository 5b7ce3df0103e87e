#pragma once

#include <algorithm>
#include <vector>

#include "starsum/matrix.hpp"
#include "starsum/multipoly.hpp"
#include "starsum/unipoly.hpp"

namespace starsum {

// Brute-force reference evaluators. These deliberately use the
// textbook definitions (full S_n sums, basis re-expansion) so the
// production algorithms can be checked against an independent route.

template <typename Elem>
Elem naive_determinant(const Matrix<Elem>& m) {
  const int n = m.n();
  Elem acc = m.at(0, 0) - m.at(0, 0);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Elem prod = m.at(0, perm[0]);
    for (int i = 1; i < n; ++i) prod = prod * m.at(i, perm[i]);
    acc = (inversions % 2 == 0) ? acc + prod : acc - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

template <typename Elem>
Elem naive_permanent(const Matrix<Elem>& m) {
  const int n = m.n();
  Elem acc = m.at(0, 0) - m.at(0, 0);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    Elem prod = m.at(0, perm[0]);
    for (int i = 1; i < n; ++i) prod = prod * m.at(i, perm[i]);
    acc = acc + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// The falling-factorial transform re-expanded into the monomial basis:
// every monomial prod x_i^{j_i} becomes the expanded product
// prod (x_i)_{j_i}. Slow but direct.
template <typename F>
MultiPoly<F> star_expand(const MultiPoly<F>& p) {
  const F& field = p.field();
  const int n = p.arity();
  MultiPoly<F> out(field, n);
  for (const auto& [mono, c] : p.terms()) {
    MultiPoly<F> term = MultiPoly<F>::constant(field, n, c);
    for (int i = 0; i < n; ++i) {
      if (mono[i] == 0) continue;
      auto ff = falling_factorial_poly(field, mono[i]);
      MultiPoly<F> expanded(field, n);
      for (long r = 0; r <= ff.degree(); ++r) {
        if (ff.coeff(r).is_zero()) continue;
        Monomial e(n, 0);
        e[i] = static_cast<int>(r);
        expanded.add_term(std::move(e), ff.coeff(r));
      }
      term = term * expanded;
    }
    out = out + term;
  }
  return out;
}

}  // namespace starsum
