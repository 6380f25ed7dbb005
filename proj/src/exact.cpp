#include "archzeta/exact.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "archzeta/errors.hpp"

namespace archzeta {

namespace {

int mod4(std::int64_t m) { return static_cast<int>(((m % 4) + 4) % 4); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits a positive big integer into (mantissa, binary exponent) with at
// least 53 significant bits in the mantissa.
std::pair<double, long> split_big(const BigInt& v) {
  const long bits = static_cast<long>(boost::multiprecision::msb(v)) + 1;
  const long shift = bits > 62 ? bits - 62 : 0;
  BigInt top = v >> shift;
  return {top.convert_to<double>(), shift};
}

// Exponent text inside "^(...)": either "h/2" or a plain integer.
HalfInt parse_exponent(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  return HalfInt::parse(text);
}

}  // namespace

ExactScalar ExactScalar::zero() {
  ExactScalar z;
  z.zero_ = true;
  return z;
}

ExactScalar ExactScalar::make(const Rational& coeff, HalfInt pow2, HalfInt pow_pi,
                              std::int64_t ipow) {
  if (coeff == 0) return zero();
  ExactScalar x;
  BigInt num = boost::multiprecision::numerator(coeff);
  BigInt den = boost::multiprecision::denominator(coeff);
  std::int64_t ip = ipow;
  if (num < 0) {
    num = -num;
    ip += 2;
  }
  const auto vn = static_cast<std::int64_t>(boost::multiprecision::lsb(num));
  const auto vd = static_cast<std::int64_t>(boost::multiprecision::lsb(den));
  num >>= vn;
  den >>= vd;
  x.coeff_ = Rational(num, den);
  x.pow2_ = pow2 + HalfInt::from_int(vn - vd);
  x.pow_pi_ = pow_pi;
  x.ipow_ = mod4(ip);
  return x;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  if (zero_ || o.zero_) return zero();
  return make(coeff_ * o.coeff_, pow2_ + o.pow2_, pow_pi_ + o.pow_pi_, ipow_ + o.ipow_);
}

ExactScalar ExactScalar::inverse() const {
  if (zero_) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return make(1 / coeff_, -pow2_, -pow_pi_, -ipow_);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  if (o.zero_) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (zero_) return zero();
  return *this * o.inverse();
}

ExactScalar ExactScalar::pow(std::int64_t e) const {
  if (zero_) {
    if (e <= 0) throw Error(ErrorCode::DivisionByZero, "non-positive power of zero");
    return zero();
  }
  ExactScalar base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  const unsigned u = static_cast<unsigned>(n);
  const Rational c(boost::multiprecision::pow(BigInt(numerator(base.coeff_)), u),
                   boost::multiprecision::pow(BigInt(denominator(base.coeff_)), u));
  return make(c, static_cast<std::int64_t>(n) * base.pow2_,
              static_cast<std::int64_t>(n) * base.pow_pi_,
              static_cast<std::int64_t>(n % 4) * base.ipow_);
}

std::complex<double> ExactScalar::to_complex() const {
  if (zero_) return {0.0, 0.0};
  auto [mn, en] = split_big(boost::multiprecision::numerator(coeff_));
  auto [md, ed] = split_big(boost::multiprecision::denominator(coeff_));
  double mant = mn / md;
  long exp2 = en - ed + static_cast<long>(pow2_.floor());
  if (!pow2_.is_integer()) mant *= std::numbers::sqrt2;

  const std::int64_t h = pow_pi_.halves();
  if (h != 0) {
    double pi_part;
    if (std::llabs(h) <= 1200) {
      pi_part = std::pow(std::numbers::pi, static_cast<double>(h) / 2.0);
    } else {
      const double l2 = static_cast<double>(h) / 2.0 * std::log2(std::numbers::pi);
      const double whole = std::floor(l2);
      exp2 += static_cast<long>(whole);
      pi_part = std::exp2(l2 - whole);
    }
    int e = 0;
    mant *= std::frexp(pi_part, &e);
    exp2 += e;
  }
  int e = 0;
  mant = std::frexp(mant, &e);
  exp2 += e;
  if (exp2 > 1024 || exp2 < -1021) {
    throw Error(ErrorCode::Overflow, "magnitude outside double range: " + to_string());
  }
  const double mag = std::ldexp(mant, static_cast<int>(exp2));
  switch (ipow_) {
    case 0: return {mag, 0.0};
    case 1: return {0.0, mag};
    case 2: return {-mag, 0.0};
    default: return {0.0, -mag};
  }
}

std::string ExactScalar::to_string() const {
  if (zero_) return "0";
  std::ostringstream out;
  if (ipow_ >= 2) out << '-';
  out << rational_to_string(coeff_);
  if (pow2_.halves() != 0) out << " * 2^(" << pow2_.halves() << "/2)";
  if (pow_pi_.halves() != 0) out << " * pi^(" << pow_pi_.halves() << "/2)";
  if (ipow_ % 2 == 1) out << " * i^1";
  return out.str();
}

ExactScalar ExactScalar::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "empty scalar text");
  std::int64_t extra_ipow = 0;
  if (text.front() == '-') {
    extra_ipow = 2;
    text = trim(text.substr(1));
  }
  ExactScalar acc = ipow(extra_ipow);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t star = text.find('*', pos);
    std::string_view tok =
        trim(text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (tok.empty()) throw Error(ErrorCode::InvalidArgument, "malformed scalar: " + std::string(text));
    if (tok.starts_with("pi^")) {
      acc *= pow_pi(parse_exponent(tok.substr(3)));
    } else if (tok.starts_with("2^")) {
      acc *= pow2(parse_exponent(tok.substr(2)));
    } else if (tok == "i") {
      acc *= imag_unit();
    } else if (tok.starts_with("i^")) {
      const HalfInt e = parse_exponent(tok.substr(2));
      if (!e.is_integer()) throw Error(ErrorCode::InvalidArgument, "non-integer power of i");
      acc *= ipow(e.as_int());
    } else if (tok == "pi") {
      acc *= pi();
    } else {
      acc *= from_rational(parse_rational(tok));
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return acc;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::NonPositiveArgument, "factorial of negative integer");
  BigInt f = 1;
  for (std::int64_t j = 2; j <= n; ++j) f *= j;
  return f;
}

ExactScalar gamma_exact(HalfInt arg) {
  if (arg.halves() <= 0) {
    throw Error(ErrorCode::NonPositiveArgument, "Gamma at non-positive argument " + arg.to_string());
  }
  if (arg.is_integer()) return ExactScalar::from_rational(Rational(factorial(arg.as_int() - 1)));
  // arg = m + 1/2: (2m)! / (4^m m!) * sqrt(pi)
  const std::int64_t m = arg.floor();
  Rational c(factorial(2 * m), factorial(m));
  return ExactScalar::make(c, HalfInt::from_int(-2 * m), half(1), 0);
}

ExactScalar gamma_complex(HalfInt arg) {
  // 2 (2 pi)^(-s) Gamma(s)
  return ExactScalar::make(Rational(2), -arg, -arg, 0) * gamma_exact(arg);
}

std::string rational_to_string(const Rational& q) {
  const BigInt& num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view t) {
    t = trim(t);
    if (t.empty()) throw Error(ErrorCode::InvalidArgument, "malformed rational: " + std::string(text));
    std::size_t i = (t.front() == '-' || t.front() == '+') ? 1 : 0;
    if (i == t.size()) throw Error(ErrorCode::InvalidArgument, "malformed rational: " + std::string(text));
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
        throw Error(ErrorCode::InvalidArgument, "malformed rational: " + std::string(text));
      }
    }
    if (t.front() == '+') t.remove_prefix(1);
    return BigInt(std::string(t));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in " + std::string(text));
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(halves_ / 2);
  return std::to_string(halves_) + "/2";
}

HalfInt HalfInt::parse(std::string_view text) {
  const Rational q = parse_rational(text);
  const Rational twice = q * 2;
  if (boost::multiprecision::denominator(twice) != 1) {
    throw Error(ErrorCode::InvalidArgument, "not a half-integer: " + std::string(text));
  }
  return from_halves(boost::multiprecision::numerator(twice).convert_to<std::int64_t>());
}

}  // namespace archzeta
