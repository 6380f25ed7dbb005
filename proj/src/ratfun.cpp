#include "archzeta/ratfun.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "archzeta/errors.hpp"

namespace archzeta {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::eval(const Rational& s) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(Rational(-1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (degree() < d.degree()) return {Polynomial(), *this};
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot(coeffs_.size() - d.coeffs_.size() + 1, Rational(0));
  const std::size_t dd = d.coeffs_.size() - 1;
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational q = rem[i + dd] / d.leading();
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q * d.coeffs_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << rational_to_string(mag);
    if (i > 0) {
      if (mag != 1) out << '*';
      out << 's';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const Rational lc = den_.leading();
  num_ = num_.scaled(1 / lc);
  den_ = den_.scaled(1 / lc);
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::NotConstant, "rational function is not constant: " + to_string());
  return num_.is_zero() ? Rational(0) : num_.coeffs()[0];
}

Rational RationalFunction::eval(const Rational& s) const {
  const Rational d = den_.eval(s);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "pole at s = " + rational_to_string(s));
  return num_.eval(s) / d;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(std::int64_t e) const {
  RationalFunction base = *this;
  if (e < 0) {
    base = constant(Rational(1)) / base;
    e = -e;
  }
  RationalFunction acc = constant(Rational(1));
  for (std::int64_t i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

GammaFactorList& GammaFactorList::operator*=(const GammaFactorList& o) {
  factors.insert(factors.end(), o.factors.begin(), o.factors.end());
  pi_pow += o.pi_pow;
  return *this;
}

GammaFactorList GammaFactorList::inverse() const {
  GammaFactorList inv = *this;
  for (auto& f : inv.factors) f.exponent = -f.exponent;
  inv.pi_pow = -inv.pi_pow;
  return inv;
}

GammaFactorList multivariate_gamma(std::int64_t m, HalfInt base, int s_sign) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "multivariate Gamma of negative rank");
  GammaFactorList out;
  out.pi_pow = HalfInt::from_int(m * (m - 1) / 2);
  for (std::int64_t j = 0; j < m; ++j) out.factors.push_back({base - HalfInt::from_int(j), s_sign, 1});
  return out;
}

GammaReduction gamma_shift_reduce(const GammaFactorList& list) {
  // Net exponent per (sign, base), then grouped by (sign, base mod 1).
  std::map<std::pair<int, std::int64_t>, std::map<std::int64_t, std::int64_t>> groups;
  for (const auto& f : list.factors) {
    if (f.s_sign != 1 && f.s_sign != -1) {
      throw Error(ErrorCode::InvalidArgument, "Gamma factor with s-sign other than +1/-1");
    }
    const std::int64_t h = f.base.halves();
    const std::int64_t residue = ((h % 2) + 2) % 2;
    groups[{f.s_sign, residue}][h] += f.exponent;
  }

  RationalFunction value = RationalFunction::constant(Rational(1));
  for (const auto& [key, by_base] : groups) {
    std::int64_t net = 0;
    std::int64_t lowest = 0;
    bool have = false;
    for (const auto& [h, e] : by_base) {
      if (e == 0) continue;
      net += e;
      if (!have || h < lowest) lowest = h;
      have = true;
    }
    if (!have) continue;
    if (net != 0) {
      throw Error(ErrorCode::IrreducibleGammaContent,
                  "net Gamma exponent " + std::to_string(net) + " does not cancel");
    }
    const int sign = key.first;
    // Gamma(c0 + m + sign*s) = Gamma(c0 + sign*s) * prod_{i<m} (c0 + i + sign*s)
    Polynomial num = Polynomial::constant(Rational(1));
    Polynomial den = Polynomial::constant(Rational(1));
    for (const auto& [h, e] : by_base) {
      if (e == 0) continue;
      const std::int64_t shift = (h - lowest) / 2;
      Polynomial poch = Polynomial::constant(Rational(1));
      for (std::int64_t i = 0; i < shift; ++i) {
        poch = poch * Polynomial::linear(Rational(lowest + 2 * i, 2), Rational(sign));
      }
      Polynomial& target = e > 0 ? num : den;
      for (std::int64_t t = 0; t < (e > 0 ? e : -e); ++t) target = target * poch;
    }
    value = value * RationalFunction(num, den);
  }
  return {value, list.pi_pow};
}

GammaFactorList c_ratio_gamma_list(std::int64_t n, std::int64_t k) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "c_ratio requires n >= 1");
  const HalfInt a = half(k + n);
  const HalfInt b = half(n - k);
  const std::int64_t up = (n + 1) / 2;
  const std::int64_t down = n / 2;
  GammaFactorList num = multivariate_gamma(n, a, -1) * multivariate_gamma(up, a, +1) *
                        multivariate_gamma(down, b, +1);
  GammaFactorList den = multivariate_gamma(n, a, +1) * multivariate_gamma(up, a, -1) *
                        multivariate_gamma(down, b, -1);
  return num / den;
}

ExactScalar c_ratio(std::int64_t n, std::int64_t k) {
  const GammaReduction red = gamma_shift_reduce(c_ratio_gamma_list(n, k));
  if (red.residual_pi_pow != HalfInt()) {
    throw Error(ErrorCode::NotConstant, "c_ratio leaves a residual power of pi");
  }
  if (!red.value.is_constant()) {
    throw Error(ErrorCode::NotConstant, "c_ratio depends on s: " + red.value.to_string());
  }
  return ExactScalar::from_rational(red.value.constant_value());
}

}  // namespace archzeta
