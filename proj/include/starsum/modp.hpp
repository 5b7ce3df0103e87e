#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "starsum/rational.hpp"

namespace starsum {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Element of Z/pZ with a runtime prime modulus. Both operands of a
// binary operation must share the modulus.
class ModP {
 public:
  ModP() : v_(0), p_(0) {}  // sentinel for containers; unusable in arithmetic
  ModP(long long v, long long p) : p_(p) {
    if (p < 2) throw std::invalid_argument("ModP: modulus must be >= 2");
    v_ = v % p;
    if (v_ < 0) v_ += p;
  }

  long long value() const { return v_; }
  long long modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  ModP operator+(const ModP& o) const { return ModP(v_ + o.matched(*this), p_); }
  ModP operator-(const ModP& o) const { return ModP(v_ - o.matched(*this), p_); }
  ModP operator*(const ModP& o) const {
    return ModP(static_cast<long long>(static_cast<__int128>(v_) * o.matched(*this) % p_), p_);
  }
  ModP operator-() const { return ModP(-v_, p_); }

  // Multiplicative inverse by extended Euclid.
  ModP inv() const {
    if (v_ == 0) throw std::domain_error("ModP: not invertible");
    long long old_r = v_, r = p_, old_s = 1, s = 0;
    while (r != 0) {
      long long quot = old_r / r;
      long long tmp = old_r - quot * r;
      old_r = r; r = tmp;
      tmp = old_s - quot * s;
      old_s = s; s = tmp;
    }
    return ModP(old_s, p_);
  }

  ModP operator/(const ModP& o) const {
    o.matched(*this);
    return *this * o.inv();
  }

  ModP pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    ModP base = *this, acc(1, p_);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  bool operator==(const ModP& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const ModP& o) const { return !(*this == o); }
  bool operator<(const ModP& o) const { return v_ < o.v_; }  // container order

  std::string to_string() const { return std::to_string(v_); }

 private:
  long long matched(const ModP& other) const {
    if (p_ != other.p_) throw std::invalid_argument("ModP: mixed moduli");
    return v_;
  }
  long long v_, p_;
};

inline ModP modp_inv(const ModP& a) { return a.inv(); }

// Field descriptor for Z/pZ. Verifies primality on construction
// (trial division; desk-scale moduli).
class PrimeField {
 public:
  using elem = ModP;

  explicit PrimeField(long long p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
  }

  long long p() const { return p_; }

  ModP zero() const { return ModP(0, p_); }
  ModP one() const { return ModP(1, p_); }
  ModP from_int(long long v) const { return ModP(v, p_); }
  ModP from_integer(const mpz_class& z) const {
    unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p_));
    return ModP(static_cast<long long>(r), p_);
  }
  // num * den^{-1} mod p; requires p not dividing den.
  ModP reduce(const Rational& r) const {
    ModP den = from_integer(r.denominator());
    if (den.is_zero()) throw std::domain_error("PrimeField: denominator divisible by p");
    return from_integer(r.numerator()) * den.inv();
  }

  ModP parse(const std::string& s) const { return from_integer(mpz_class(s)); }
  std::string to_string(const ModP& e) const { return e.to_string(); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  long long p_;
};

}  // namespace starsum
