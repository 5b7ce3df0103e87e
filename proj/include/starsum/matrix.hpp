#pragma once

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "starsum/multipoly.hpp"
#include "starsum/rings.hpp"

namespace starsum {

// Dense square matrix over ring elements. Entries must share one
// coefficient ring; the element operations enforce that themselves.
template <typename Elem>
class Matrix {
 public:
  explicit Matrix(std::vector<std::vector<Elem>> rows) {
    n_ = static_cast<int>(rows.size());
    if (n_ == 0) throw std::invalid_argument("Matrix: empty");
    for (auto& r : rows) {
      if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("Matrix: not square");
      for (auto& e : r) a_.push_back(std::move(e));
    }
  }
  Matrix(int n, const Elem& fill) : n_(n), a_(static_cast<size_t>(n) * n, fill) {
    if (n < 1) throw std::invalid_argument("Matrix: dimension must be positive");
  }

  int n() const { return n_; }
  Elem& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Elem& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<Elem> a_;
};

namespace detail {

// Fraction-free Bareiss elimination with row pivoting. Divisions are
// by earlier pivots and stay exact in any integral domain with exact
// division; over a field they are plain division.
template <typename Elem>
Elem determinant_bareiss(Matrix<Elem> m) {
  const int n = m.n();
  const Elem zero = m.at(0, 0) - m.at(0, 0);
  bool flip = false;
  Elem prev_pivot = zero;  // unused at step 0
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (!m.at(r, k).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return zero;
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      flip = !flip;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Elem t = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = (k == 0) ? t : t / prev_pivot;
      }
      m.at(i, k) = zero;
    }
    prev_pivot = m.at(k, k);
  }
  Elem det = m.at(n - 1, n - 1);
  return flip ? -det : det;
}

// Division-free determinant: Laplace expansion over column subsets,
// dynamic programming on the subset lattice. O(2^n * n) ring
// operations; fine at desk scale and valid over any commutative ring
// (including polynomial entries).
template <typename Elem>
Elem determinant_expansion(const Matrix<Elem>& m) {
  const int n = m.n();
  const Elem zero = m.at(0, 0) - m.at(0, 0);
  std::vector<Elem> dp(size_t{1} << n, zero);
  for (int j = 0; j < n; ++j) dp[size_t{1} << j] = m.at(0, j);
  for (unsigned s = 2; s <= static_cast<unsigned>(n); ++s) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != static_cast<int>(s)) continue;
      Elem acc = zero;
      int idx = 0;
      for (int j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        const Elem& entry = m.at(s - 1, j);
        if (!entry.is_zero()) {
          Elem term = entry * dp[mask ^ (1u << j)];
          // cofactor sign (-1)^{(s-1)+idx}
          acc = ((static_cast<int>(s) - 1 + idx) % 2 == 0) ? acc + term : acc - term;
        }
        ++idx;
      }
      dp[mask] = std::move(acc);
    }
  }
  return dp[(size_t{1} << n) - 1];
}

}  // namespace detail

template <typename Elem>
Elem determinant(const Matrix<Elem>& m) {
  if constexpr (HasDivision<Elem>) {
    return detail::determinant_bareiss(m);
  } else {
    return detail::determinant_expansion(m);
  }
}

// Permanent by Ryser inclusion-exclusion over column subsets:
// per(A) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} a_ij.
// 2^n * n^2 ring operations, no division.
template <typename Elem>
Elem permanent(const Matrix<Elem>& m) {
  const int n = m.n();
  const Elem zero = m.at(0, 0) - m.at(0, 0);
  Elem total = zero;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Elem prod = zero;
    bool first_row = true;
    for (int i = 0; i < n && (first_row || !prod.is_zero()); ++i) {
      Elem rowsum = zero;
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) rowsum = rowsum + m.at(i, j);
      prod = first_row ? rowsum : prod * rowsum;
      first_row = false;
    }
    if ((n - std::popcount(mask)) % 2 == 0)
      total = total + prod;
    else
      total = total - prod;
  }
  return total;
}

// The expanded determinant det(a_ij x_j^{m_i}): a polynomial in
// x_1..x_n, built from the signed permutation sum.
template <typename F>
MultiPoly<F> monomial_matrix_det(const F& field, const Matrix<typename F::elem>& a,
                                 const std::vector<int>& m) {
  const int n = a.n();
  if (static_cast<int>(m.size()) != n)
    throw std::invalid_argument("monomial_matrix_det: exponent count must equal dimension");
  for (int e : m)
    if (e < 0) throw std::invalid_argument("monomial_matrix_det: negative exponent");
  MultiPoly<F> out(field, n);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    typename F::elem coeff = a.at(0, perm[0]);
    for (int i = 1; i < n; ++i) coeff = coeff * a.at(i, perm[i]);
    if (inversions % 2) coeff = -coeff;
    Monomial mono(n, 0);
    for (int i = 0; i < n; ++i) mono[perm[i]] += m[i];
    out.add_term(std::move(mono), std::move(coeff));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct RootsPermanentResult {
  bool nonzero;
  Cyclotomic value;
};

// per(zeta_t^{s-1}) for zeta_t = zeta_q^{exps_t}: the exact cyclotomic
// permanent of the root Vandermonde, with a coordinate-exact zero test.
inline RootsPermanentResult roots_permanent_nonzero(long q, const std::vector<long>& exps) {
  if (q < 1 || q % 2 == 0) throw std::invalid_argument("roots_permanent_nonzero: q must be odd and positive");
  const int n = static_cast<int>(exps.size());
  if (n < 1) throw std::invalid_argument("roots_permanent_nonzero: need at least one root");
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if ((exps[s] - exps[t]) % q == 0)
        throw std::invalid_argument("roots_permanent_nonzero: repeated exponent mod q");
  Matrix<Cyclotomic> m(n, Cyclotomic(q));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) m.at(s, t) = Cyclotomic::root_pow(q, exps[t] * s);
  Cyclotomic value = permanent(m);
  return {!value.is_zero(), value};
}

}  // namespace starsum
