#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "archzeta/halfint.hpp"

namespace archzeta {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Monomial q * 2^(pow2) * pi^(powPi) * i^(ipow) with q > 0 rational.
///
/// Canonical form: the numerator and denominator of q are odd and coprime
/// (every factor of two lives in pow2) and the sign lives in ipow via
/// -1 = i^2. Zero is a separate state with all other fields at their
/// defaults, so structural equality is value equality.
class ExactScalar {
 public:
  /// Canonical one.
  ExactScalar() = default;

  static ExactScalar make(const Rational& coeff, HalfInt pow2, HalfInt pow_pi,
                          std::int64_t ipow);
  static ExactScalar zero();
  static ExactScalar one() { return ExactScalar(); }
  static ExactScalar from_rational(const Rational& q) {
    return make(q, HalfInt(), HalfInt(), 0);
  }
  static ExactScalar from_int(std::int64_t v) { return from_rational(Rational(v)); }
  static ExactScalar pi() { return make(Rational(1), HalfInt(), HalfInt::from_int(1), 0); }
  static ExactScalar two() { return make(Rational(1), HalfInt::from_int(1), HalfInt(), 0); }
  static ExactScalar imag_unit() { return make(Rational(1), HalfInt(), HalfInt(), 1); }
  static ExactScalar pow2(HalfInt e) { return make(Rational(1), e, HalfInt(), 0); }
  static ExactScalar pow_pi(HalfInt e) { return make(Rational(1), HalfInt(), e, 0); }
  /// i^m for any integer m.
  static ExactScalar ipow(std::int64_t m) { return make(Rational(1), HalfInt(), HalfInt(), m); }
  /// (-1)^m for any integer m.
  static ExactScalar sign(std::int64_t m) { return ipow(2 * m); }

  bool is_zero() const { return zero_; }
  const Rational& coeff() const { return coeff_; }
  HalfInt pow2_exp() const { return pow2_; }
  HalfInt pow_pi_exp() const { return pow_pi_; }
  int ipow_exp() const { return ipow_; }

  /// True when the value is 2^(h/2) * i^m for some h, m.
  bool is_unit_two_power() const {
    return !zero_ && coeff_ == 1 && pow_pi_ == HalfInt();
  }

  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }
  ExactScalar inverse() const;
  ExactScalar pow(std::int64_t e) const;

  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

  /// Double-precision value; throws ErrorCode::Overflow outside double range.
  std::complex<double> to_complex() const;

  /// "q * 2^(a/2) * pi^(b/2) * i^c" with zero exponents omitted and the
  /// real sign (i^2) written as a leading '-'.
  std::string to_string() const;
  /// Inverse of to_string(); also accepts any integer i-exponent and any
  /// factor order.
  static ExactScalar parse(std::string_view text);

 private:
  bool zero_ = false;
  Rational coeff_{1};
  HalfInt pow2_;
  HalfInt pow_pi_;
  int ipow_ = 0;
};

/// Gamma at a positive half-integer.
ExactScalar gamma_exact(HalfInt arg);
/// Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s) at a positive half-integer.
ExactScalar gamma_complex(HalfInt arg);

/// n! for n >= 0.
BigInt factorial(std::int64_t n);

/// Text of a rational in "p" or "p/q" form.
std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace archzeta
