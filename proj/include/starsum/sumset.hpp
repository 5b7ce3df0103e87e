#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "starsum/errors.hpp"
#include "starsum/identities.hpp"
#include "starsum/matrix.hpp"
#include "starsum/multipoly.hpp"
#include "starsum/star.hpp"
#include "starsum/unipoly.hpp"

namespace starsum {

// The unique integer in (-m/2, m/2] congruent to x mod m.
inline long balanced_residue(long x, long m) {
  if (m < 1) throw std::invalid_argument("balanced_residue: modulus must be positive");
  long r = x % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// One pairwise restriction on the tuples of a restricted sumset.
// Indices are 0-based here; the JSON wire format is 1-based.
template <typename F>
struct ConstraintSpec {
  using Elem = typename F::elem;
  enum class Kind { diff_avoid, pairwise_distinct, scaled_distinct, congruence, poly_image_distinct };

  Kind kind = Kind::pairwise_distinct;
  int i = -1, j = -1;                     // diff_avoid, congruence
  std::vector<Elem> avoid;                // diff_avoid: a_i - a_j must miss these
  std::vector<Elem> scale;                // scaled_distinct multipliers, one per set
  std::vector<long> zeta_exps;            // scaled_distinct via roots of unity (cyclotomic rings)
  long modulus = 0;                       // congruence m_ij
  std::vector<long> offsets;              // congruence b_1..b_n
  std::vector<UnivariatePoly<F>> polys;   // poly_image_distinct P_1..P_n

  static ConstraintSpec diff_avoid_between(int i, int j, std::vector<Elem> s) {
    ConstraintSpec c;
    c.kind = Kind::diff_avoid;
    c.i = i;
    c.j = j;
    c.avoid = std::move(s);
    return c;
  }
  static ConstraintSpec distinct() { return ConstraintSpec{}; }
  static ConstraintSpec scaled(std::vector<Elem> multipliers) {
    ConstraintSpec c;
    c.kind = Kind::scaled_distinct;
    c.scale = std::move(multipliers);
    return c;
  }
  static ConstraintSpec congruent_apart(int i, int j, long modulus, std::vector<long> offsets) {
    ConstraintSpec c;
    c.kind = Kind::congruence;
    c.i = i;
    c.j = j;
    c.modulus = modulus;
    c.offsets = std::move(offsets);
    return c;
  }
  static ConstraintSpec poly_images(std::vector<UnivariatePoly<F>> polys) {
    ConstraintSpec c;
    c.kind = Kind::poly_image_distinct;
    c.polys = std::move(polys);
    return c;
  }
};

// A restricted-sumset instance: a ground ring, finite sets A_1..A_n,
// and pairwise constraints.
template <typename F>
struct SumsetProblem {
  using Elem = typename F::elem;

  F field;
  std::vector<std::vector<Elem>> sets;
  std::vector<ConstraintSpec<F>> constraints;

  int n() const { return static_cast<int>(sets.size()); }
  std::vector<long> sizes() const {
    std::vector<long> k;
    k.reserve(sets.size());
    for (const auto& s : sets) k.push_back(static_cast<long>(s.size()));
    return k;
  }

  void validate() const {
    const int arity = n();
    if (arity < 1) throw std::invalid_argument("SumsetProblem: needs at least one set");
    for (const auto& s : sets) {
      if (s.empty()) throw std::invalid_argument("SumsetProblem: sets must be nonempty");
      for (size_t x = 0; x < s.size(); ++x)
        for (size_t y = x + 1; y < s.size(); ++y)
          if (s[x] == s[y]) throw std::invalid_argument("SumsetProblem: repeated element within a set");
    }
    for (const auto& c : constraints) {
      using Kind = typename ConstraintSpec<F>::Kind;
      switch (c.kind) {
        case Kind::diff_avoid:
          if (c.i < 0 || c.j <= c.i || c.j >= arity)
            throw std::invalid_argument("diff_avoid: requires 0-based indices with i < j");
          break;
        case Kind::pairwise_distinct:
          break;
        case Kind::scaled_distinct:
          if (static_cast<int>(c.scale.size()) != arity)
            throw std::invalid_argument("scaled_distinct: needs one multiplier per set");
          break;
        case Kind::congruence:
          if (c.i < 0 || c.j <= c.i || c.j >= arity)
            throw std::invalid_argument("congruence: requires 0-based indices with i < j");
          if (c.modulus < 1) throw std::invalid_argument("congruence: modulus must be >= 1");
          if (static_cast<int>(c.offsets.size()) != arity)
            throw std::invalid_argument("congruence: needs one offset per set");
          if constexpr (ring_traits<F>::kind != RingKind::rational) {
            throw std::invalid_argument("congruence: only supported over the rational ring");
          } else {
            for (const auto& s : sets)
              for (const auto& e : s)
                if (!e.is_integer())
                  throw std::invalid_argument("congruence: set elements must be integers");
          }
          break;
        case Kind::poly_image_distinct:
          if (static_cast<int>(c.polys.size()) != arity)
            throw std::invalid_argument("poly_image_distinct: needs one polynomial per set");
          break;
      }
    }
  }
};

namespace detail {

inline long long integer_value(const Rational& r) {
  if (!r.is_integer()) throw std::invalid_argument("expected an integer element");
  return r.numerator().get_si();
}

template <typename F>
bool tuple_admissible(const SumsetProblem<F>& prob, const std::vector<int>& pick,
                      const std::vector<const typename F::elem*>& chosen) {
  using Kind = typename ConstraintSpec<F>::Kind;
  const int arity = prob.n();
  for (const auto& c : prob.constraints) {
    switch (c.kind) {
      case Kind::diff_avoid: {
        auto diff = *chosen[c.i] - *chosen[c.j];
        for (const auto& s : c.avoid)
          if (diff == s) return false;
        break;
      }
      case Kind::pairwise_distinct:
        for (int x = 0; x < arity; ++x)
          for (int y = x + 1; y < arity; ++y)
            if (*chosen[x] == *chosen[y]) return false;
        break;
      case Kind::scaled_distinct:
        for (int x = 0; x < arity; ++x)
          for (int y = x + 1; y < arity; ++y)
            if (c.scale[x] * *chosen[x] == c.scale[y] * *chosen[y]) return false;
        break;
      case Kind::congruence: {
        if constexpr (ring_traits<F>::kind == RingKind::rational) {
          long long lhs = integer_value(*chosen[c.i]) + c.offsets[c.i];
          long long rhs = integer_value(*chosen[c.j]) + c.offsets[c.j];
          if ((lhs - rhs) % c.modulus == 0) return false;
        }
        break;
      }
      case Kind::poly_image_distinct:
        for (int x = 0; x < arity; ++x)
          for (int y = x + 1; y < arity; ++y)
            if (c.polys[x].evaluate(*chosen[x]) == c.polys[y].evaluate(*chosen[y])) return false;
        break;
    }
  }
  (void)pick;
  return true;
}

}  // namespace detail

// The exact set of sums a_1 + ... + a_n over all constraint-satisfying
// tuples, deduplicated by exact ring equality and returned in the
// element container order.
template <typename F>
std::vector<typename F::elem> enumerate_restricted_sumset(const SumsetProblem<F>& prob,
                                                          long cap = 10'000'000) {
  prob.validate();
  const int arity = prob.n();
  long long tuples = 1;
  for (const auto& s : prob.sets) {
    tuples *= static_cast<long long>(s.size());
    if (tuples > cap)
      throw cap_exceeded("enumerate_restricted_sumset: tuple count exceeds cap " + std::to_string(cap));
  }
  std::set<typename F::elem> sums;
  std::vector<int> pick(arity, 0);
  std::vector<const typename F::elem*> chosen(arity);
  while (true) {
    for (int i = 0; i < arity; ++i) chosen[i] = &prob.sets[i][pick[i]];
    if (detail::tuple_admissible(prob, pick, chosen)) {
      typename F::elem sum = *chosen[0];
      for (int i = 1; i < arity; ++i) sum = sum + *chosen[i];
      sums.insert(std::move(sum));
    }
    int i = arity - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(prob.sets[i].size())) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return std::vector<typename F::elem>(sums.begin(), sums.end());
}

// ---------------------------------------------------------------------------
// Bound catalog and checkers
// ---------------------------------------------------------------------------

enum class ResultId { cd, dh, anr, hs, ls, su, thm1_1, thm1_2, thm1_3 };

inline const char* to_string(ResultId r) {
  switch (r) {
    case ResultId::cd: return "cd";
    case ResultId::dh: return "dh";
    case ResultId::anr: return "anr";
    case ResultId::hs: return "hs";
    case ResultId::ls: return "ls";
    case ResultId::su: return "su";
    case ResultId::thm1_1: return "thm1.1";
    case ResultId::thm1_2: return "thm1.2";
    default: return "thm1.3";
  }
}

inline ResultId parse_result_id(const std::string& s) {
  if (s == "cd" || s == "i") return ResultId::cd;
  if (s == "dh" || s == "ii") return ResultId::dh;
  if (s == "anr" || s == "iii") return ResultId::anr;
  if (s == "hs" || s == "iv") return ResultId::hs;
  if (s == "ls" || s == "v") return ResultId::ls;
  if (s == "su" || s == "vi") return ResultId::su;
  if (s == "thm1.1") return ResultId::thm1_1;
  if (s == "thm1.2") return ResultId::thm1_2;
  if (s == "thm1.3") return ResultId::thm1_3;
  throw std::invalid_argument("unknown result id \"" + s + "\"");
}

struct BoundParams {
  std::vector<long> sizes;       // k_1..k_n
  std::optional<long long> p;    // field characteristic; nullopt = characteristic 0
  long m = 0;                    // per-result meaning (constraint size / degree)
};

// The claimed lower bound for the result (for thm1.3, the threshold
// that the cardinality must strictly exceed).
inline long bound_for(ResultId rid, const BoundParams& bp) {
  const long n = static_cast<long>(bp.sizes.size());
  if (n < 1) throw std::invalid_argument("bound_for: needs at least one set size");
  long total = 0, kmax = bp.sizes.front(), kmin = bp.sizes.front();
  for (long k : bp.sizes) {
    total += k;
    kmax = std::max(kmax, k);
    kmin = std::min(kmin, k);
  }
  auto clamp_p = [&](long v) {
    return bp.p ? std::min<long>(v, static_cast<long>(*bp.p)) : v;
  };
  switch (rid) {
    case ResultId::cd:
      return clamp_p(total - n + 1);
    case ResultId::dh:
      return clamp_p(n * bp.sizes.front() - n * n + 1);
    case ResultId::anr:
      return clamp_p(total - n * (n + 1) / 2 + 1);
    case ResultId::hs:
      return (bp.sizes.front() - 1 - bp.m * (n - 1)) * n + 1;
    case ResultId::ls:
      return (kmax - 1) * n - (bp.m + 1) * n * (n - 1) / 2 + 1;
    case ResultId::su:
      return (bp.sizes.front() - 1) * n - (bp.m + 1) * n * (n - 1) / 2 + 1;
    case ResultId::thm1_1:
    case ResultId::thm1_2:
      return (kmax - 1 - bp.m * (n - 1)) * n + 1;
    case ResultId::thm1_3:
      return (bp.sizes.front() - n) * n;  // threshold; actual must strictly exceed it
  }
  throw std::invalid_argument("bound_for: unknown result id");
}

struct BoundReport {
  std::string result_id;
  bool hypotheses_met = false;
  std::vector<std::string> reasons;  // unmet hypotheses, one message each
  long claimed_bound = 0;
  bool strict = false;  // pass needs actual > claimed instead of >=
  long actual_cardinality = 0;
  bool pass = false;
};

struct CheckParams {
  long m = 0;  // required for hs, thm1.1, thm1.2; ignored elsewhere
};

namespace detail {

template <typename F>
using Kind = typename ConstraintSpec<F>::Kind;

template <typename F>
std::map<std::pair<int, int>, long> diff_avoid_sizes(const SumsetProblem<F>& prob) {
  std::map<std::pair<int, int>, long> out;
  for (const auto& c : prob.constraints)
    if (c.kind == Kind<F>::diff_avoid) out[{c.i, c.j}] += static_cast<long>(c.avoid.size());
  return out;
}

template <typename F>
long count_kind(const SumsetProblem<F>& prob, Kind<F> k) {
  long c = 0;
  for (const auto& s : prob.constraints)
    if (s.kind == k) ++c;
  return c;
}

template <typename F>
const ConstraintSpec<F>* find_kind(const SumsetProblem<F>& prob, Kind<F> k) {
  for (const auto& s : prob.constraints)
    if (s.kind == k) return &s;
  return nullptr;
}

inline void require_reason(std::vector<std::string>& reasons, bool ok, const std::string& why) {
  if (!ok) reasons.push_back(why);
}

// True when the characteristic is large enough: char 0 always works.
inline bool char_exceeds(const std::optional<long long>& p, long threshold) {
  return !p || *p > threshold;
}

template <typename F>
std::optional<long> common_poly_degree(const ConstraintSpec<F>& c) {
  if (c.polys.empty()) return std::nullopt;
  long d = c.polys.front().degree();
  for (const auto& q : c.polys)
    if (q.degree() != d) return std::nullopt;
  return d;
}

}  // namespace detail

// Verifies every hypothesis of the named result against the problem as
// given, enumerates the restricted sumset, and compares its cardinality
// with the claimed bound. Unmet hypotheses are reported, never silently
// ignored.
template <typename F>
BoundReport check_bound(const SumsetProblem<F>& prob, ResultId rid, const CheckParams& cp = {},
                        long cap = 10'000'000) {
  using CKind = typename ConstraintSpec<F>::Kind;
  prob.validate();
  BoundReport rep;
  rep.result_id = to_string(rid);
  const long n = prob.n();
  const auto sizes = prob.sizes();
  const auto p = ring_traits<F>::characteristic(prob.field);
  auto& reasons = rep.reasons;

  BoundParams bp{sizes, p ? std::optional<long long>(*p) : std::nullopt, cp.m};
  const long kfirst = sizes.front();
  bool sizes_equal = std::all_of(sizes.begin(), sizes.end(), [&](long k) { return k == kfirst; });

  switch (rid) {
    case ResultId::cd:
      detail::require_reason(reasons, prob.constraints.empty(), "cd: sumset must be unrestricted");
      break;

    case ResultId::dh: {
      detail::require_reason(reasons, detail::count_kind(prob, CKind::pairwise_distinct) == 1 &&
                                          prob.constraints.size() == 1,
                             "dh: constraints must be exactly one pairwise_distinct");
      bool same_sets = true;
      for (const auto& s : prob.sets) {
        auto a = s, b = prob.sets.front();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) same_sets = false;
      }
      detail::require_reason(reasons, same_sets, "dh: all sets must be equal");
      break;
    }

    case ResultId::anr: {
      detail::require_reason(reasons, detail::count_kind(prob, CKind::pairwise_distinct) == 1 &&
                                          prob.constraints.size() == 1,
                             "anr: constraints must be exactly one pairwise_distinct");
      bool increasing = true;
      for (size_t i = 0; i + 1 < sizes.size(); ++i)
        if (sizes[i] >= sizes[i + 1]) increasing = false;
      detail::require_reason(reasons, increasing, "anr: requires k_1 < k_2 < ... < k_n");
      break;
    }

    case ResultId::hs: {
      detail::require_reason(reasons, cp.m >= 1, "hs: positive parameter m required");
      detail::require_reason(reasons, sizes_equal, "hs: all sets must have the same cardinality");
      bool only_diff = true;
      for (const auto& c : prob.constraints)
        if (c.kind != CKind::diff_avoid) only_diff = false;
      detail::require_reason(reasons, only_diff, "hs: constraints must all be diff_avoid");
      if (cp.m >= 1)
        for (const auto& [pair, sz] : detail::diff_avoid_sizes(prob))
          detail::require_reason(reasons, sz <= 2 * cp.m,
                                 "hs: avoid set for pair (" + std::to_string(pair.first + 1) + "," +
                                     std::to_string(pair.second + 1) + ") exceeds 2m");
      const long l = kfirst - 1 - cp.m * (n - 1);
      detail::require_reason(reasons, detail::char_exceeds(p, std::max(l * n, cp.m * n)),
                             "hs: requires p > max{ln, mn}");
      break;
    }

    case ResultId::ls: {
      const auto* pc = detail::find_kind(prob, CKind::poly_image_distinct);
      detail::require_reason(reasons, pc && prob.constraints.size() == 1,
                             "ls: constraints must be exactly one poly_image_distinct");
      long m = 0;
      if (pc) {
        auto deg = detail::common_poly_degree(*pc);
        if (!deg || *deg < 1) {
          reasons.push_back("ls: polynomials must share a common positive degree");
        } else {
          m = *deg;
          bool monic = true;
          for (const auto& q : pc->polys)
            if (!q.coeff(*deg).is_one()) monic = false;
          detail::require_reason(reasons, monic, "ls: polynomials must be monic");
        }
      }
      bool steps_ok = true;
      for (size_t i = 0; i + 1 < sizes.size(); ++i) {
        long d = sizes[i + 1] - sizes[i];
        if (d != 0 && d != 1) steps_ok = false;
      }
      detail::require_reason(reasons, steps_ok, "ls: requires k_{i+1} - k_i in {0,1}");
      long kn = *std::max_element(sizes.begin(), sizes.end());
      detail::require_reason(reasons, sizes.back() == kn,
                             "ls: sets must be ordered by nondecreasing cardinality");
      detail::require_reason(reasons, m >= 1 && kn > m * (n - 1), "ls: requires k_n > m(n-1)");
      const long K = (kn - 1) * n - (m + 1) * n * (n - 1) / 2;
      detail::require_reason(reasons, detail::char_exceeds(p, K), "ls: requires p > K");
      bp.m = m;
      break;
    }

    case ResultId::su: {
      const auto* pc = detail::find_kind(prob, CKind::poly_image_distinct);
      detail::require_reason(reasons,
                             pc && detail::count_kind(prob, CKind::pairwise_distinct) == 1 &&
                                 prob.constraints.size() == 2,
                             "su: constraints must be pairwise_distinct plus poly_image_distinct");
      long m = 0;
      if (pc) {
        auto deg = detail::common_poly_degree(*pc);
        if (!deg || *deg < 1) {
          reasons.push_back("su: polynomials must share a common positive degree");
        } else {
          m = *deg;
          Matrix<typename F::elem> lead(static_cast<int>(n), prob.field.one());
          for (int i = 1; i < n; ++i)
            for (int j = 0; j < n; ++j) lead.at(i, j) = lead.at(i - 1, j) * pc->polys[j].coeff(m);
          detail::require_reason(reasons, !permanent(lead).is_zero(),
                                 "su: permanent of leading-coefficient powers vanishes");
        }
      }
      detail::require_reason(reasons, sizes_equal, "su: all sets must have the same cardinality");
      detail::require_reason(reasons, m >= 1 && kfirst > m * (n - 1), "su: requires k > m(n-1)");
      const long K = (kfirst - 1) * n - (m + 1) * n * (n - 1) / 2;
      detail::require_reason(reasons, detail::char_exceeds(p, K), "su: requires p > K");
      bp.m = m;
      break;
    }

    case ResultId::thm1_1: {
      detail::require_reason(reasons, cp.m >= 1, "thm1.1: positive parameter m required");
      bool ladder = true;
      for (size_t i = 0; i + 1 < sizes.size(); ++i)
        if (sizes[i + 1] != sizes[i] + 1) ladder = false;
      detail::require_reason(reasons, ladder, "thm1.1: requires |A_{i+1}| = |A_i| + 1");
      bool only_diff = true;
      for (const auto& c : prob.constraints)
        if (c.kind != CKind::diff_avoid) only_diff = false;
      detail::require_reason(reasons, only_diff, "thm1.1: constraints must all be diff_avoid");
      if (cp.m >= 1)
        for (const auto& [pair, sz] : detail::diff_avoid_sizes(prob))
          detail::require_reason(reasons, sz < 2 * cp.m,
                                 "thm1.1: avoid set for pair (" + std::to_string(pair.first + 1) + "," +
                                     std::to_string(pair.second + 1) + ") must have fewer than 2m elements");
      const long k = sizes.back();
      detail::require_reason(reasons,
                             detail::char_exceeds(p, std::max(cp.m * n, (k - 1) * n - cp.m * n * (n - 1))),
                             "thm1.1: requires p > max{mn, (k-1)n - mn(n-1)}");
      // The coefficient driving the bound is a nonzero integer h; the
      // field sees h * e, so p must not divide h. Verified via eq2.7.
      if (cp.m >= 1 && k > cp.m * (n - 1) && p) {
        IdentityParams ip;
        ip.n = static_cast<int>(n);
        ip.m = cp.m;
        ip.k = k;
        Rational h = closed_form(IdentityId::eq2_7, ip).value.coeff(0);
        if (!h.is_integer())
          reasons.push_back("thm1.1: internal error, eq2.7 value is not an integer");
        else
          detail::require_reason(reasons, mpz_fdiv_ui(h.numerator().get_mpz_t(), *p) != 0,
                                 "thm1.1: p divides the driving coefficient h");
      }
      break;
    }

    case ResultId::thm1_2: {
      if constexpr (ring_traits<F>::kind != RingKind::cyclotomic) {
        reasons.push_back("thm1.2: requires the cyclotomic ring");
      } else {
        const long q = prob.field.q();
        detail::require_reason(reasons, q % 2 == 1, "thm1.2: requires odd q");
        detail::require_reason(reasons, cp.m >= 1, "thm1.2: positive parameter m required");
        detail::require_reason(reasons, sizes_equal, "thm1.2: all sets must have the same cardinality");
        const auto* sc = detail::find_kind(prob, CKind::scaled_distinct);
        detail::require_reason(reasons, sc && detail::count_kind(prob, CKind::scaled_distinct) == 1,
                               "thm1.2: needs exactly one scaled_distinct constraint");
        bool rest_diff = true;
        for (const auto& c : prob.constraints)
          if (c.kind != CKind::scaled_distinct && c.kind != CKind::diff_avoid) rest_diff = false;
        detail::require_reason(reasons, rest_diff,
                               "thm1.2: constraints must be scaled_distinct plus diff_avoid sets");
        if (cp.m >= 1)
          for (const auto& [pair, sz] : detail::diff_avoid_sizes(prob))
            detail::require_reason(reasons, sz <= 2 * cp.m - 1,
                                   "thm1.2: avoid set for pair (" + std::to_string(pair.first + 1) + "," +
                                       std::to_string(pair.second + 1) + ") exceeds 2m-1 elements");
        if (sc) {
          if (static_cast<long>(sc->zeta_exps.size()) != n) {
            reasons.push_back("thm1.2: scaled_distinct must carry n root exponents");
          } else {
            bool distinct = true;
            for (size_t s = 0; s < sc->zeta_exps.size(); ++s)
              for (size_t t = s + 1; t < sc->zeta_exps.size(); ++t)
                if ((sc->zeta_exps[s] - sc->zeta_exps[t]) % q == 0) distinct = false;
            detail::require_reason(reasons, distinct, "thm1.2: root exponents must be distinct mod q");
            if (distinct && q % 2 == 1) {
              auto rp = roots_permanent_nonzero(q, sc->zeta_exps);
              detail::require_reason(reasons, rp.nonzero,
                                     "thm1.2: per(zeta_t^{s-1}) vanishes");
            }
          }
        }
      }
      break;
    }

    case ResultId::thm1_3: {
      if constexpr (ring_traits<F>::kind != RingKind::rational) {
        reasons.push_back("thm1.3: requires the rational ring with integer sets");
      } else {
        bool integral = true;
        for (const auto& s : prob.sets)
          for (const auto& e : s)
            if (!e.is_integer()) integral = false;
        detail::require_reason(reasons, integral, "thm1.3: set elements must be integers");
        detail::require_reason(reasons, sizes_equal, "thm1.3: all sets must have the same cardinality");
        const auto* sc = detail::find_kind(prob, CKind::scaled_distinct);
        detail::require_reason(reasons, sc && detail::count_kind(prob, CKind::scaled_distinct) == 1,
                               "thm1.3: needs exactly one scaled_distinct constraint");
        if (sc) {
          bool positive = std::all_of(sc->scale.begin(), sc->scale.end(),
                                      [](const Rational& a) { return a.sign() > 0; });
          detail::require_reason(reasons, positive, "thm1.3: multipliers must be positive");
        }
        std::set<std::pair<int, int>> covered;
        bool congruence_ok = integral;
        const std::vector<long>* shared_b = nullptr;
        for (const auto& c : prob.constraints) {
          if (c.kind == CKind::scaled_distinct) continue;
          if (c.kind != CKind::congruence) {
            reasons.push_back("thm1.3: constraints must be scaled_distinct plus congruence records");
            congruence_ok = false;
            break;
          }
          if (shared_b && *shared_b != c.offsets) {
            reasons.push_back("thm1.3: congruence records must share one offset vector b");
            congruence_ok = false;
          }
          shared_b = &c.offsets;
          covered.insert({c.i, c.j});
          if (integral) {
            long widest = 0;
            for (const auto& xi : prob.sets[c.i])
              for (const auto& xj : prob.sets[c.j])
                widest = std::max<long>(widest,
                                        std::abs(detail::integer_value(xi) - detail::integer_value(xj)));
            detail::require_reason(reasons, c.modulus > 2 * widest,
                                   "thm1.3: modulus m_" + std::to_string(c.i + 1) + std::to_string(c.j + 1) +
                                       " must exceed 2*max|x_i - x_j|");
          }
        }
        if (congruence_ok)
          detail::require_reason(reasons,
                                 static_cast<long>(covered.size()) == n * (n - 1) / 2,
                                 "thm1.3: needs one congruence record per pair i < j");
      }
      rep.strict = true;
      break;
    }
  }

  rep.hypotheses_met = reasons.empty();
  rep.claimed_bound = bound_for(rid, bp);
  auto sums = enumerate_restricted_sumset(prob, cap);
  rep.actual_cardinality = static_cast<long>(sums.size());
  rep.pass = rep.hypotheses_met && (rep.strict ? rep.actual_cardinality > rep.claimed_bound
                                               : rep.actual_cardinality >= rep.claimed_bound);
  return rep;
}

// ---------------------------------------------------------------------------
// Coefficient-to-bound driver
// ---------------------------------------------------------------------------

template <typename F>
struct Lemma11Result {
  std::optional<long> bound;       // sum(k_i - 1) - deg P + 1 when the coefficient is nonzero
  typename F::elem coefficient;    // [x_1^{k_1-1}...x_n^{k_n-1}] P * (sum x)^K
};

// Evaluates the coefficient of prod x_i^{k_i-1} in P*(x_1+...+x_n)^K,
// K = sum(k_i-1) - deg P, and converts a nonzero coefficient into the
// cardinality lower bound K+1 for {sum a_i : a_i in A_i, P(a) != 0}.
template <typename F>
Lemma11Result<F> lemma11_lower_bound(const MultiPoly<F>& poly,
                                     const std::vector<std::vector<typename F::elem>>& sets) {
  if (poly.is_zero()) throw std::invalid_argument("lemma11_lower_bound: P must be nonzero");
  if (static_cast<int>(sets.size()) != poly.arity())
    throw std::invalid_argument("lemma11_lower_bound: one set per variable required");
  long target_total = 0;
  std::vector<long> target(sets.size());
  for (size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw std::invalid_argument("lemma11_lower_bound: sets must be nonempty");
    target[i] = static_cast<long>(sets[i].size()) - 1;
    target_total += target[i];
  }
  const long deg = poly.degree();
  if (deg > target_total)
    throw std::invalid_argument("lemma11_lower_bound: deg P exceeds sum (k_i - 1)");
  typename F::elem coeff = poly.field().zero();
  if (poly.is_homogeneous()) {
    coeff = coeff_via_star(poly, target);
  } else {
    auto expanded =
        poly * variable_sum(poly.field(), poly.arity()).pow(static_cast<unsigned>(target_total - deg));
    Monomial mono(target.begin(), target.end());
    coeff = expanded.coefficient_of(mono);
  }
  Lemma11Result<F> out{std::nullopt, coeff};
  if (!coeff.is_zero()) out.bound = target_total - deg + 1;
  return out;
}

}  // namespace starsum
