#pragma once

#include <cctype>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starsum/rings.hpp"

namespace starsum {

// Exponent vector of a monomial; length is the polynomial arity.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Graded lexicographic order: by total degree, then lexicographically.
// Gives polynomials a deterministic, reproducible term order.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

enum class Symmetry { symmetric, antisymmetric, neither };

// Sparse multivariate polynomial over a coefficient field descriptor F.
// No zero coefficients are stored; equality is structural.
template <typename F>
class MultiPoly {
 public:
  using Elem = typename F::elem;
  using TermMap = std::map<Monomial, Elem, GradedLexLess>;

  MultiPoly(F field, int arity) : field_(std::move(field)), arity_(arity) {
    if (arity < 0) throw std::invalid_argument("MultiPoly: negative arity");
  }

  static MultiPoly constant(F field, int arity, Elem c) {
    MultiPoly p(std::move(field), arity);
    p.add_term(Monomial(arity, 0), std::move(c));
    return p;
  }
  static MultiPoly one(F field, int arity) {
    Elem c = field.one();
    return constant(std::move(field), arity, std::move(c));
  }
  // x_{index} (0-based); rendered as x<index+1>.
  static MultiPoly variable(F field, int arity, int index) {
    if (index < 0 || index >= arity) throw std::invalid_argument("MultiPoly: variable index out of range");
    MultiPoly p(field, arity);
    Monomial m(arity, 0);
    m[index] = 1;
    p.add_term(std::move(m), field.one());
    return p;
  }

  const F& field() const { return field_; }
  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    return total_degree(terms_.begin()->first) == d;  // graded order: min-degree term first
  }

  void add_term(Monomial m, Elem c) {
    if (static_cast<int>(m.size()) != arity_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Elem coefficient_of(const Monomial& m) const {
    if (static_cast<int>(m.size()) != arity_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    match(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    match(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r(field_, arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    match(o);
    MultiPoly r(field_, arity_);
    Monomial m(arity_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        for (int i = 0; i < arity_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  MultiPoly scaled(const Elem& s) const {
    MultiPoly r(field_, arity_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }

  // Repeated squaring.
  MultiPoly pow(unsigned e) const {
    MultiPoly acc = one(field_, arity_);
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  Elem evaluate(std::span<const Elem> args) const {
    if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("MultiPoly: evaluation arity mismatch");
    Elem acc = field_.zero();
    for (const auto& [m, c] : terms_) {
      Elem t = c;
      for (int i = 0; i < arity_; ++i)
        for (int e = 0; e < m[i]; ++e) t = t * args[i];
      acc = acc + t;
    }
    return acc;
  }
  Elem evaluate(const std::vector<Elem>& args) const { return evaluate(std::span<const Elem>(args)); }

  MultiPoly swap_vars(int i, int j) const {
    MultiPoly r(field_, arity_);
    for (const auto& [m, c] : terms_) {
      Monomial swapped = m;
      std::swap(swapped[i], swapped[j]);
      r.terms_.emplace(std::move(swapped), c);
    }
    return r;
  }

  bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Renders highest-degree terms first, e.g. "-3*x1^2*x2 + x3 - 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string mono;
      for (int i = 0; i < arity_; ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + 1);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      std::string cs = field_.to_string(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (mono.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += mono;
      } else {
        out += cs + "*" + mono;
      }
    }
    return out;
  }

 private:
  void match(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    if (field_ != o.field_) throw std::invalid_argument("MultiPoly: mixed coefficient rings");
  }

  F field_;
  int arity_;
  TermMap terms_;
};

// x_1 + ... + x_n.
template <typename F>
MultiPoly<F> variable_sum(const F& field, int arity) {
  MultiPoly<F> p(field, arity);
  for (int i = 0; i < arity; ++i) {
    Monomial m(arity, 0);
    m[i] = 1;
    p.add_term(std::move(m), field.one());
  }
  return p;
}

// prod_{1<=i<j<=n} (x_j - x_i)^e, expanded. e = 1 is the Vandermonde
// polynomial.
template <typename F>
MultiPoly<F> build_difference_product(const F& field, int n, int e) {
  if (n < 1 || e < 0) throw std::invalid_argument("build_difference_product: bad parameters");
  MultiPoly<F> base = MultiPoly<F>::one(field, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      base = base * (MultiPoly<F>::variable(field, n, j) - MultiPoly<F>::variable(field, n, i));
  return base.pow(static_cast<unsigned>(e));
}

// Classifies P under variable transpositions: symmetric if every
// transposition fixes P, antisymmetric if every transposition negates
// it, neither otherwise. Adjacent transpositions generate the whole
// symmetric group, so only those are checked.
template <typename F>
Symmetry symmetry_signature(const MultiPoly<F>& p) {
  const int n = p.arity();
  bool sym = true, antisym = true;
  for (int i = 0; i + 1 < n && (sym || antisym); ++i) {
    MultiPoly<F> swapped = p.swap_vars(i, i + 1);
    if (swapped != p) sym = false;
    if (swapped != -p) antisym = false;
  }
  if (sym) return Symmetry::symmetric;
  if (antisym) return Symmetry::antisymmetric;
  return Symmetry::neither;
}

inline const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::antisymmetric: return "antisymmetric";
    default: return "neither";
  }
}

namespace detail {

// Recursive-descent parser for the textual polynomial format produced
// by MultiPoly::to_string: terms joined by '+'/'-', each a product of
// an optional coefficient and variable powers "x<i>[^e]".
template <typename F>
class PolyParser {
 public:
  PolyParser(const F& field, int arity, std::string text)
      : field_(field), arity_(arity), s_(std::move(text)) {}

  MultiPoly<F> parse() {
    MultiPoly<F> acc(field_, arity_);
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = (get() == '-');
    while (true) {
      parse_term(acc, negate);
      skip_ws();
      if (pos_ >= s_.size()) break;
      char op = get();
      if (op == '+') negate = false;
      else if (op == '-') negate = true;
      else fail("expected '+' or '-'");
    }
    return acc;
  }

 private:
  void parse_term(MultiPoly<F>& acc, bool negate) {
    typename F::elem coeff = field_.one();
    Monomial mono(arity_, 0);
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (peek() == 'x') {
        get();
        int idx = parse_int();
        if (idx < 1 || idx > arity_) fail("variable index out of range");
        int e = 1;
        skip_ws();
        if (peek() == '^') {
          get();
          e = parse_int();
          if (e < 0) fail("negative exponent");
        }
        mono[idx - 1] += e;
        saw_factor = true;
      } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '[') {
        coeff = coeff * parse_coefficient();
        saw_factor = true;
      } else {
        fail("expected coefficient or variable");
      }
      skip_ws();
      if (peek() == '*') {
        get();
        continue;
      }
      break;
    }
    if (!saw_factor) fail("empty term");
    if (negate) coeff = -coeff;
    acc.add_term(std::move(mono), std::move(coeff));
  }

  typename F::elem parse_coefficient() {
    size_t start = pos_;
    if (peek() == '[') {  // bracketed coordinate literal
      while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
      if (pos_ >= s_.size()) fail("unterminated '['");
      ++pos_;
    } else {
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
        ++pos_;
    }
    try {
      return field_.parse(s_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      fail(e.what());
    }
    throw std::logic_error("unreachable");
  }

  int parse_int() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos_) + ": " + why);
  }

  const F& field_;
  int arity_;
  std::string s_;
  size_t pos_ = 0;
};

}  // namespace detail

template <typename F>
MultiPoly<F> parse_poly(const F& field, int arity, const std::string& text) {
  return detail::PolyParser<F>(field, arity, text).parse();
}

}  // namespace starsum
