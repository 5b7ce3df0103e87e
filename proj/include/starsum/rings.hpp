#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "starsum/cyclotomic.hpp"
#include "starsum/modp.hpp"
#include "starsum/rational.hpp"

namespace starsum {

enum class RingKind { rational, prime, cyclotomic };

// Field descriptor for Q.
class RationalField {
 public:
  using elem = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long v) const { return Rational(mpz_class(static_cast<long>(v))); }
  Rational from_integer(const mpz_class& z) const { return Rational(z); }
  Rational parse(const std::string& s) const { return Rational::parse(s); }
  std::string to_string(const Rational& e) const { return e.to_string(); }

  bool operator==(const RationalField&) const { return true; }
  bool operator!=(const RationalField&) const { return false; }
};

template <typename F>
struct ring_traits;

template <>
struct ring_traits<RationalField> {
  static constexpr RingKind kind = RingKind::rational;
  static std::optional<long long> characteristic(const RationalField&) { return std::nullopt; }
};

template <>
struct ring_traits<PrimeField> {
  static constexpr RingKind kind = RingKind::prime;
  static std::optional<long long> characteristic(const PrimeField& f) { return f.p(); }
};

template <>
struct ring_traits<CyclotomicField> {
  static constexpr RingKind kind = RingKind::cyclotomic;
  static std::optional<long long> characteristic(const CyclotomicField&) { return std::nullopt; }
};

// Ring elements whose operator/ is exact division (fields).
template <typename E>
concept HasDivision = requires(const E& a, const E& b) {
  { a / b } -> std::convertible_to<E>;
};

}  // namespace starsum
