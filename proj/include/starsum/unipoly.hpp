#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "starsum/rings.hpp"

namespace starsum {

// Dense univariate polynomial over a coefficient field descriptor F.
// coeff(i) is the coefficient of x^i; the top coefficient is nonzero
// (trailing zeros trimmed), and the zero polynomial has no stored
// coefficients.
template <typename F>
class UnivariatePoly {
 public:
  using Elem = typename F::elem;

  explicit UnivariatePoly(F field) : field_(std::move(field)) {}
  UnivariatePoly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static UnivariatePoly constant(F field, Elem c) {
    UnivariatePoly p(field);
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
  }
  // x - shift
  static UnivariatePoly linear(F field, long shift) {
    UnivariatePoly p(field);
    p.c_ = {field.from_int(-shift), field.one()};
    return p;
  }

  const F& field() const { return field_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Elem coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return field_.zero();
    return c_[i];
  }

  UnivariatePoly operator+(const UnivariatePoly& o) const {
    UnivariatePoly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), field_.zero());
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
  }
  UnivariatePoly operator-(const UnivariatePoly& o) const { return *this + (-o); }
  UnivariatePoly operator-() const {
    UnivariatePoly r(field_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
  }
  UnivariatePoly operator*(const UnivariatePoly& o) const {
    UnivariatePoly r(field_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, field_.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
  }
  UnivariatePoly scaled(const Elem& s) const {
    UnivariatePoly r(field_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
  }

  // Exact quotient; throws std::domain_error on a nonzero remainder.
  UnivariatePoly divide_exact(const UnivariatePoly& den) const
    requires HasDivision<Elem>
  {
    if (den.is_zero()) throw std::domain_error("UnivariatePoly: division by zero polynomial");
    UnivariatePoly quot(field_);
    if (is_zero()) return quot;
    if (degree() < den.degree()) throw std::domain_error("UnivariatePoly: inexact division");
    std::vector<Elem> rem = c_;
    const long dd = den.degree();
    quot.c_.assign(rem.size() - dd, field_.zero());
    const Elem& lead = den.c_.back();
    for (size_t i = rem.size(); i-- > static_cast<size_t>(dd);) {
      if (rem[i].is_zero()) continue;
      Elem q = rem[i] / lead;
      quot.c_[i - dd] = q;
      for (long t = 0; t <= dd; ++t) rem[i - dd + t] = rem[i - dd + t] - q * den.c_[t];
    }
    for (const auto& c : rem)
      if (!c.is_zero()) throw std::domain_error("UnivariatePoly: inexact division");
    quot.trim();
    return quot;
  }

  Elem evaluate(const Elem& x) const {
    Elem acc = field_.zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  bool operator==(const UnivariatePoly& o) const { return c_ == o.c_; }
  bool operator!=(const UnivariatePoly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      std::string cs = field_.to_string(c_[i]);
      bool neg = !cs.empty() && cs[0] == '-';
      if (out.empty()) {
        if (neg) { out += "-"; cs = cs.substr(1); }
      } else {
        out += neg ? " - " : " + ";
        if (neg) cs = cs.substr(1);
      }
      if (i == 0) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  F field_;
  std::vector<Elem> c_;
};

// (x)_s = x(x-1)...(x-s+1); (x)_0 = 1.
template <typename F>
UnivariatePoly<F> falling_factorial_poly(const F& field, long s) {
  if (s < 0) throw std::invalid_argument("falling_factorial_poly: negative index");
  auto p = UnivariatePoly<F>::constant(field, field.one());
  for (long t = 0; t < s; ++t) p = p * UnivariatePoly<F>::linear(field, t);
  return p;
}

// (x - shift)_s as a polynomial in x.
template <typename F>
UnivariatePoly<F> shifted_falling_factorial_poly(const F& field, long shift, long s) {
  auto p = UnivariatePoly<F>::constant(field, field.one());
  for (long t = 0; t < s; ++t) p = p * UnivariatePoly<F>::linear(field, shift + t);
  return p;
}

// (a)_s evaluated in the ring.
template <typename F>
typename F::elem falling_factorial_value(const F& field, const typename F::elem& a, long s) {
  if (s < 0) throw std::invalid_argument("falling_factorial_value: negative index");
  typename F::elem acc = field.one();
  for (long t = 0; t < s; ++t) acc = acc * (a - field.from_int(t));
  return acc;
}

}  // namespace starsum
