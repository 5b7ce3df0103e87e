#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "starsum/errors.hpp"

namespace starsum {

namespace detail {

inline long mod_reduce(long x, long m) {
  x %= m;
  return x < 0 ? x + m : x;
}

// Backtracking over assignments position -> unused index such that
// residue(position, index) values stay pairwise distinct mod m.
template <typename Residue>
bool assign_distinct(int pos, int n, long m, std::vector<int>& sigma, std::vector<bool>& used_idx,
                     std::vector<bool>& used_res, const Residue& residue) {
  if (pos == n) return true;
  for (int idx = 0; idx < n; ++idx) {
    if (used_idx[idx]) continue;
    long r = mod_reduce(residue(pos, idx), m);
    if (used_res[r]) continue;
    sigma[pos] = idx;
    used_idx[idx] = used_res[r] = true;
    if (assign_distinct(pos + 1, n, m, sigma, used_idx, used_res, residue)) return true;
    used_idx[idx] = used_res[r] = false;
  }
  return false;
}

template <typename Residue>
std::optional<std::vector<int>> search_distinct(int n, long m, const Residue& residue) {
  std::vector<int> sigma(n);
  std::vector<bool> used_idx(n, false), used_res(m, false);
  if (assign_distinct(0, n, m, sigma, used_idx, used_res, residue)) return sigma;
  return std::nullopt;
}

}  // namespace detail

// A permutation sigma of {1..n} with 1+b_{sigma(1)}, ..., n+b_{sigma(n)}
// pairwise distinct mod m, found by backtracking; nullopt when none
// exists (possible only when n > (m+1)/2). Returned 1-based.
inline std::optional<std::vector<int>> snevily_permutation(long m, int n, const std::vector<long>& b) {
  if (m < 1 || n < 1) throw std::invalid_argument("snevily_permutation: m and n must be positive");
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("snevily_permutation: b must have length n");
  if (n > m) return std::nullopt;  // n residues cannot be distinct mod m
  auto sigma = detail::search_distinct(n, m, [&](int pos, int idx) { return (pos + 1) + b[idx]; });
  if (!sigma) return std::nullopt;
  for (int& v : *sigma) ++v;
  return sigma;
}

// Scans every b in (Z/m)^n for one with no valid Snevily permutation.
// Returns the first counterexample found, or nullopt if all b admit one.
inline std::optional<std::vector<long>> snevily_counterexample(long m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("snevily_counterexample: m and n must be positive");
  std::vector<long> b(n, 0);
  while (true) {
    if (!snevily_permutation(m, n, b)) return b;
    int i = n - 1;
    while (i >= 0 && b[i] == m - 1) b[i--] = 0;
    if (i < 0) return std::nullopt;
    ++b[i];
  }
}

// A permutation sigma with a_i + b_{sigma(i)} pairwise distinct in
// Z/nZ. Requires a to enumerate Z/nZ and sum(b) = 0 (the exact
// condition under which such a permutation exists); pass
// allow_violation to search anyway.
inline std::optional<std::vector<int>> hall_permutation(int n, const std::vector<long>& a,
                                                        const std::vector<long>& b,
                                                        bool allow_violation = false) {
  if (n < 1) throw std::invalid_argument("hall_permutation: n must be positive");
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("hall_permutation: a and b must have length n");
  std::vector<bool> seen(n, false);
  for (long v : a) {
    long r = detail::mod_reduce(v, n);
    if (seen[r]) throw std::invalid_argument("hall_permutation: a does not enumerate Z/nZ");
    seen[r] = true;
  }
  long bsum = std::accumulate(b.begin(), b.end(), 0L);
  if (detail::mod_reduce(bsum, n) != 0 && !allow_violation)
    throw hypothesis_error("hall_permutation: hypothesis violated (sum of b is not 0 mod n)");
  auto sigma = detail::search_distinct(n, n, [&](int pos, int idx) { return a[pos] + b[idx]; });
  if (!sigma) return std::nullopt;
  for (int& v : *sigma) ++v;
  return sigma;
}

struct ParkerDecomposition {
  std::vector<int> sigma_prime;  // 1-based permutation of {1..n-1}
  std::vector<int> tau;          // 1-based permutation of {1..n-1}
};

// Writes each b_i (i < n) as a_{sigma'(i)} + a_{tau(i)} with
// a = (1, 2, ..., n-1, 0) in Z/nZ and a_{sigma'(i)} != 0, via a
// permutation sigma with b_i - a_{sigma(i)} pairwise distinct.
// Requires b_n = 0 and sum(b) = 0 mod n.
inline ParkerDecomposition parker_decomposition(int n, const std::vector<long>& b) {
  if (n < 2) throw std::invalid_argument("parker_decomposition: n must be at least 2");
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("parker_decomposition: b must have length n");
  if (detail::mod_reduce(b[n - 1], n) != 0)
    throw hypothesis_error("parker_decomposition: requires b_n = 0");
  long bsum = std::accumulate(b.begin(), b.end(), 0L);
  if (detail::mod_reduce(bsum, n) != 0)
    throw hypothesis_error("parker_decomposition: requires sum of b = 0 mod n");

  std::vector<long> a(n);
  for (int i = 0; i + 1 < n; ++i) a[i] = i + 1;
  a[n - 1] = 0;

  auto sigma = detail::search_distinct(n, n, [&](int pos, int idx) { return b[pos] - a[idx]; });
  if (!sigma)
    throw std::logic_error("parker_decomposition: no Hall permutation found; this should be impossible");

  const long w = a[(*sigma)[n - 1]];
  ParkerDecomposition out;
  out.sigma_prime.resize(n - 1);
  out.tau.resize(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    long shifted = detail::mod_reduce(a[(*sigma)[i]] - w, n);  // in 1..n-1
    out.sigma_prime[i] = static_cast<int>(shifted);            // index of that value in a, 1-based
    long residue = detail::mod_reduce(b[i] - shifted, n);      // in 1..n-1
    out.tau[i] = static_cast<int>(residue);
  }
  // validate the decomposition before returning it
  std::vector<bool> seen_s(n, false), seen_t(n, false);
  for (int i = 0; i + 1 < n; ++i) {
    int s = out.sigma_prime[i], t = out.tau[i];
    if (s < 1 || s >= n || t < 1 || t >= n || seen_s[s] || seen_t[t] ||
        detail::mod_reduce(a[s - 1] + a[t - 1] - b[i], n) != 0)
      throw std::logic_error("parker_decomposition: construction failed validation");
    seen_s[s] = seen_t[t] = true;
  }
  return out;
}

}  // namespace starsum
