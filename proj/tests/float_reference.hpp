// Double-precision re-evaluation of the closed forms, used only as an
// independent cross-check of the exact engine.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <vector>

#include "archzeta/weights.hpp"

namespace fref {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Lanczos, g = 7, n = 9.
inline double gamma(double x) {
  static const double c[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
  x -= 1.0;
  double a = c[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

inline double gamma_c(double s) { return 2.0 * std::pow(2.0 * kPi, -s) * gamma(s); }

inline double sum(const std::vector<std::int64_t>& v) {
  return static_cast<double>(std::accumulate(v.begin(), v.end(), std::int64_t{0}));
}

inline std::vector<double> nu_star(const archzeta::ZetaContext& c) {
  std::vector<double> out;
  for (auto it = c.wt.nu.rbegin(); it != c.wt.nu.rend(); ++it) out.push_back(-static_cast<double>(*it));
  return out;
}

inline double weyl(const std::vector<std::int64_t>& w) {
  double acc = 1.0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      acc *= static_cast<double>(w[i] - w[j] + static_cast<std::int64_t>(j - i)) / static_cast<double>(j - i);
  return acc;
}

inline std::vector<double> shifted(const archzeta::ZetaContext& c) {
  const double a = static_cast<double>(c.a()), b = static_cast<double>(c.b()), r = static_cast<double>(c.r());
  std::vector<double> out;
  for (std::int64_t j = 1; j <= c.a(); ++j) out.push_back(c.wt.tau[j - 1] - r / 2 + (a - b + 1) / 2 - j);
  for (std::int64_t j = 1; j <= c.b(); ++j) out.push_back(c.wt.nu[j - 1] - r / 2 + (a + b + 1) / 2 - j);
  return out;
}

inline cd euler(double s, const archzeta::ZetaContext& c) {
  cd acc(1.0, 0.0);
  for (double cj : shifted(c)) {
    const double m = s + std::abs(cj);
    acc *= std::polar(1.0, -kPi / 2 * m) * gamma_c(m);
  }
  return acc;
}

inline cd euler_expanded(const archzeta::ZetaContext& c) {
  const double a = c.a(), b = c.b(), k = c.k(), r = c.r();
  const auto ns = nu_star(c);
  double nss = 0;
  for (double v : ns) nss += v;
  const double e = -sum(c.wt.tau) - nss - a * (k - r) / 2 - b * (k + r) / 2 + (a * (a - 1) + b * (b - 1)) / 2 + 2 * a * b;
  cd acc = std::pow(2.0, static_cast<double>(c.n())) * std::pow(cd(0.0, 2.0 * kPi), e);
  for (std::int64_t j = 1; j <= c.a(); ++j) acc *= gamma(c.wt.tau[j - 1] + 1 - j + (k - r) / 2 - b);
  for (std::int64_t j = 1; j <= c.b(); ++j) acc *= gamma(ns[j - 1] + 1 - j + (k + r) / 2 - a);
  return acc;
}

inline double twist(const archzeta::ZetaContext& c) {
  double nss = 0;
  for (double v : nu_star(c)) nss += v;
  return -sum(c.wt.tau) - nss + c.a() * (c.k() + c.r()) / 2.0 + c.b() * (c.k() - c.r()) / 2.0;
}

inline cd form1(const archzeta::ZetaContext& c) {
  const double a = c.a(), b = c.b(), n = c.n(), k = c.k(), r = c.r();
  const auto ns = nu_star(c);
  cd acc = std::pow(2.0, a * b - n / 2) * std::pow(kPi, a * b) * std::pow(cd(0.0, 2.0 * kPi), twist(c));
  acc /= weyl(c.wt.tau) * weyl(c.wt.nu);
  for (std::int64_t j = 1; j <= c.a(); ++j) acc *= gamma(c.wt.tau[j - 1] - j + (k - r) / 2 - b + 1);
  for (std::int64_t j = 1; j <= c.b(); ++j) acc *= gamma(ns[j - 1] - j + (k + r) / 2 - a + 1);
  for (std::int64_t j = 1; j <= c.n(); ++j) acc /= gamma(k - j + 1);
  return acc;
}

inline double dim_lambda(const archzeta::ZetaContext& c) {
  const double a = c.a(), b = c.b(), k = c.k(), r = c.r();
  const auto ns = nu_star(c);
  double acc = 1.0;
  for (std::int64_t j = 1; j <= c.n(); ++j) acc /= gamma(k - j + 1);
  for (std::int64_t j = 1; j <= c.a(); ++j) {
    const double t = c.wt.tau[j - 1];
    acc *= gamma(t - j + (k - r) / 2 - b + 1) / gamma(t - j - (k + r) / 2 + a + 1);
  }
  for (std::int64_t j = 1; j <= c.b(); ++j) {
    const double v = ns[j - 1];
    acc *= gamma(v - j + (k + r) / 2 - a + 1) / gamma(v - j - (k - r) / 2 + b + 1);
  }
  for (std::int64_t i = 1; i <= c.a(); ++i)
    for (std::int64_t j = i + 1; j <= c.a(); ++j) acc *= c.wt.tau[i - 1] - c.wt.tau[j - 1] - i + j;
  for (std::int64_t i = 1; i <= c.b(); ++i)
    for (std::int64_t j = i + 1; j <= c.b(); ++j) acc *= ns[i - 1] - ns[j - 1] - i + j;
  for (std::int64_t i = 1; i <= c.a(); ++i)
    for (std::int64_t j = 1; j <= c.b(); ++j) acc *= c.wt.tau[i - 1] + ns[j - 1] + 1 - i - j;
  return acc;
}

inline double formal_degree(const archzeta::ZetaContext& c) {
  const double a = c.a(), b = c.b(), n = c.n();
  const auto ns = nu_star(c);
  double acc = 1.0;
  for (std::int64_t i = 1; i <= c.a(); ++i)
    for (std::int64_t j = i + 1; j <= c.a(); ++j) acc *= c.wt.tau[i - 1] - c.wt.tau[j - 1] - i + j;
  for (std::int64_t i = 1; i <= c.b(); ++i)
    for (std::int64_t j = i + 1; j <= c.b(); ++j) acc *= ns[i - 1] - ns[j - 1] - i + j;
  for (std::int64_t i = 1; i <= c.a(); ++i)
    for (std::int64_t j = 1; j <= c.b(); ++j) acc *= c.wt.tau[i - 1] + ns[j - 1] + 1 - i - j;
  acc /= std::pow(2.0, a * b - n / 2) * std::pow(kPi, a * b);
  for (std::int64_t j = 1; j <= c.a(); ++j) acc /= gamma(j);
  for (std::int64_t j = 1; j <= c.b(); ++j) acc /= gamma(j);
  return acc;
}

inline double mc(const archzeta::ZetaContext& c) {
  const double a = c.a(), b = c.b(), k = c.k(), r = c.r();
  const auto ns = nu_star(c);
  double acc = std::pow(kPi, twist(c));
  for (std::int64_t j = 1; j <= c.a(); ++j) acc *= gamma(c.wt.tau[j - 1] - (k + r) / 2 + a - j + 1) / gamma(j);
  for (std::int64_t j = 1; j <= c.b(); ++j) acc *= gamma(ns[j - 1] - (k - r) / 2 + b - j + 1) / gamma(j);
  return acc;
}

inline cd chain(const archzeta::ZetaContext& c) {
  const cd two_i_pow = std::pow(cd(0.0, 2.0), twist(c));
  return two_i_pow / (weyl(c.wt.tau) * weyl(c.wt.nu)) * dim_lambda(c) / formal_degree(c) * mc(c);
}

inline double rel_err(cd got, cd want) { return std::abs(got - want) / std::abs(want); }

}  // namespace fref
