#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "starsum/rational.hpp"

namespace starsum {

namespace detail {

// Quotient of dense integer polynomials where the divisor is monic and
// divides exactly; coefficients low to high.
inline std::vector<mpz_class> divide_exact_monic(std::vector<mpz_class> num,
                                                 const std::vector<mpz_class>& den) {
  const size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("divide_exact_monic: degree underflow");
  std::vector<mpz_class> quot(num.size() - dd, 0);
  for (size_t i = num.size(); i-- > dd;) {
    mpz_class c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (size_t t = 0; t <= dd; ++t) num[i - dd + t] -= c * den[t];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("divide_exact_monic: nonzero remainder");
  return quot;
}

}  // namespace detail

// Phi_q, the q-th cyclotomic polynomial, as integer coefficients low to
// high. Computed as (x^q - 1) / prod_{d|q, d<q} Phi_d by exact division
// and memoized; the memo permits concurrent readers with serialized
// insertion.
inline const std::vector<mpz_class>& cyclotomic_polynomial(long q) {
  if (q < 1) throw std::invalid_argument("cyclotomic_polynomial: q must be positive");
  static std::map<long, std::vector<mpz_class>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(q);
  if (it != memo.end()) return it->second;

  std::function<const std::vector<mpz_class>&(long)> get = [&](long n) -> const std::vector<mpz_class>& {
    auto found = memo.find(n);
    if (found != memo.end()) return found->second;
    std::vector<mpz_class> result;
    if (n == 1) {
      result = {-1, 1};  // x - 1
    } else {
      std::vector<mpz_class> num(n + 1, 0);
      num[0] = -1;
      num[n] = 1;  // x^n - 1
      for (long d = 1; d < n; ++d)
        if (n % d == 0) num = detail::divide_exact_monic(std::move(num), get(d));
      result = std::move(num);
    }
    return memo.emplace(n, std::move(result)).first->second;
  };
  return get(q);
}

inline long cyclotomic_degree(long q) {
  return static_cast<long>(cyclotomic_polynomial(q).size()) - 1;
}

// Element of Q(zeta_q), represented as a residue mod Phi_q so that the
// element is zero iff every coordinate is zero. coords has length
// deg Phi_q = phi(q), low power first.
class Cyclotomic {
 public:
  explicit Cyclotomic(long q) : q_(q), c_(cyclotomic_degree(q), Rational(0)) {
    if (q < 1) throw std::invalid_argument("Cyclotomic: q must be positive");
  }
  Cyclotomic(long q, std::vector<Rational> coords) : q_(q), c_(std::move(coords)) {
    if (static_cast<long>(c_.size()) != cyclotomic_degree(q))
      throw std::invalid_argument("Cyclotomic: coordinate vector has wrong length");
  }

  static Cyclotomic from_rational(long q, const Rational& r) {
    Cyclotomic e(q);
    e.c_[0] = r;
    return e;
  }

  // zeta_q^k with k reduced mod q first.
  static Cyclotomic root_pow(long q, long k) {
    k %= q;
    if (k < 0) k += q;
    const auto& phi = cyclotomic_polynomial(q);
    std::vector<Rational> raw(static_cast<size_t>(k) + 1, Rational(0));
    raw.back() = Rational(1);
    return Cyclotomic(q, reduce(raw, phi));
  }

  long conductor() const { return q_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_one() const {
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }

  Cyclotomic operator+(const Cyclotomic& o) const {
    match(o);
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return Cyclotomic(q_, std::move(r));
  }
  Cyclotomic operator-(const Cyclotomic& o) const {
    match(o);
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
    return Cyclotomic(q_, std::move(r));
  }
  Cyclotomic operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Cyclotomic(q_, std::move(r));
  }
  Cyclotomic operator*(const Cyclotomic& o) const {
    match(o);
    std::vector<Rational> prod(2 * c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j].is_zero()) continue;
        prod[i + j] += c_[i] * o.c_[j];
      }
    }
    return Cyclotomic(q_, reduce(prod, cyclotomic_polynomial(q_)));
  }

  bool operator==(const Cyclotomic& o) const { return q_ == o.q_ && c_ == o.c_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  bool operator<(const Cyclotomic& o) const {  // container order
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] < o.c_[i]) return true;
      if (o.c_[i] < c_[i]) return false;
    }
    return false;
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].to_string();
    }
    return s + "]";
  }

 private:
  static std::vector<Rational> reduce(std::vector<Rational> raw, const std::vector<mpz_class>& phi) {
    const size_t deg = phi.size() - 1;
    if (raw.size() < deg) raw.resize(deg, Rational(0));
    for (size_t i = raw.size(); i-- > deg;) {
      if (raw[i].is_zero()) continue;
      Rational c = raw[i];
      for (size_t t = 0; t < deg; ++t) raw[i - deg + t] -= c * Rational(phi[t]);
      raw[i] = Rational(0);
    }
    raw.resize(deg);
    return raw;
  }
  void match(const Cyclotomic& o) const {
    if (q_ != o.q_) throw std::invalid_argument("Cyclotomic: mixed conductors");
  }

  long q_;
  std::vector<Rational> c_;
};

inline bool cyclo_is_zero(const Cyclotomic& e) { return e.is_zero(); }
inline Cyclotomic cyclo_root_pow(long q, long k) { return Cyclotomic::root_pow(q, k); }

// Field descriptor for Q(zeta_q).
class CyclotomicField {
 public:
  using elem = Cyclotomic;

  explicit CyclotomicField(long q) : q_(q) {
    if (q < 1) throw std::invalid_argument("CyclotomicField: q must be positive");
    cyclotomic_polynomial(q);  // validate and warm the memo
  }

  long q() const { return q_; }

  Cyclotomic zero() const { return Cyclotomic(q_); }
  Cyclotomic one() const { return from_int(1); }
  Cyclotomic from_int(long long v) const { return embed(Rational(mpz_class(static_cast<long>(v)))); }
  Cyclotomic from_integer(const mpz_class& z) const { return embed(Rational(z)); }
  Cyclotomic embed(const Rational& r) const { return Cyclotomic::from_rational(q_, r); }
  Cyclotomic root(long k) const { return Cyclotomic::root_pow(q_, k); }

  Cyclotomic parse(const std::string& s) const;  // defined after the helper below
  std::string to_string(const Cyclotomic& e) const { return e.to_string(); }

  bool operator==(const CyclotomicField& o) const { return q_ == o.q_; }
  bool operator!=(const CyclotomicField& o) const { return q_ != o.q_; }

 private:
  long q_;
};

inline Cyclotomic CyclotomicField::parse(const std::string& s) const {
  // "[a, b, ...]" coordinates, or a bare rational embedded via the
  // constant coordinate.
  auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("Cyclotomic: empty literal");
  if (s[first] != '[') return embed(Rational::parse(s));
  auto close = s.rfind(']');
  if (close == std::string::npos) throw std::invalid_argument("Cyclotomic: missing ']'");
  std::vector<Rational> coords;
  std::string body = s.substr(first + 1, close - first - 1);
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b != std::string::npos) coords.push_back(Rational::parse(tok.substr(b, e - b + 1)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Cyclotomic(q_, std::move(coords));
}

}  // namespace starsum
