#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "archzeta/exact.hpp"

namespace archzeta {

/// Dense polynomial in one indeterminate s over Q, coefficients low to high.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// c + slope * s
  static Polynomial linear(const Rational& c, const Rational& slope) {
    return Polynomial({c, slope});
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational eval(const Rational& s) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// Reduced quotient num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
 public:
  /// The zero function.
  RationalFunction() : den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(const Rational& c) {
    return RationalFunction(Polynomial::constant(c), Polynomial::constant(Rational(1)));
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Value of a constant function; throws NotConstant otherwise.
  Rational constant_value() const;
  Rational eval(const Rational& s) const;

  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction pow(std::int64_t e) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// Gamma(base + s_sign * s)^exponent.
struct GammaFactor {
  HalfInt base;
  int s_sign = 1;
  std::int64_t exponent = 1;
  friend bool operator==(const GammaFactor&, const GammaFactor&) = default;
};

/// pi^pi_pow * prod Gamma(base + s_sign * s)^exponent, kept as formal symbols.
struct GammaFactorList {
  std::vector<GammaFactor> factors;
  HalfInt pi_pow;

  GammaFactorList& operator*=(const GammaFactorList& o);
  GammaFactorList inverse() const;
  friend GammaFactorList operator*(GammaFactorList x, const GammaFactorList& y) { return x *= y; }
  friend GammaFactorList operator/(GammaFactorList x, const GammaFactorList& y) {
    return x *= y.inverse();
  }
};

/// Gamma_m(x) = pi^(m(m-1)/2) prod_{j<m} Gamma(x - j), x = base + s_sign * s.
GammaFactorList multivariate_gamma(std::int64_t m, HalfInt base, int s_sign);

struct GammaReduction {
  RationalFunction value;
  HalfInt residual_pi_pow;
};

/// Rewrites the Gamma content as Pochhammer products. Factors are grouped by
/// (s_sign, base mod 1); each group must have net exponent zero, otherwise
/// ErrorCode::IrreducibleGammaContent is thrown.
GammaReduction gamma_shift_reduce(const GammaFactorList& list);

/// The symbolic Gamma ratio
///   Gamma_n(A - s) / Gamma_n(A + s) * Gamma_ceil(A + s) Gamma_floor(B + s)
///     / (Gamma_ceil(A - s) Gamma_floor(B - s)),
/// with A = (k+n)/2, B = (n-k)/2, ceil = ceil(n/2), floor = floor(n/2).
GammaFactorList c_ratio_gamma_list(std::int64_t n, std::int64_t k);

/// Reduces c_ratio_gamma_list(n, k) and returns the constant it collapses
/// to. Throws NotConstant if s-dependence or pi content survives.
ExactScalar c_ratio(std::int64_t n, std::int64_t k);

}  // namespace archzeta
