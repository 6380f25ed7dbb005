#include "archzeta/lfactors.hpp"

#include <numeric>

#include "archzeta/errors.hpp"

namespace archzeta {

namespace {

std::int64_t sum(const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

ExactScalar l_factor(HalfInt s, const DiscreteSeriesWeight& wt, const Signature& sig, std::int64_t r) {
  ExactScalar acc;
  for (const HalfInt& c : shifted_parameters(wt, sig, r)) acc *= gamma_complex(s + c.abs());
  return acc;
}

ExactScalar euler_factor(HalfInt s, const ZetaContext& ctx) {
  ExactScalar acc;
  for (const HalfInt& c : shifted_parameters(ctx.wt, ctx.sig, ctx.r())) {
    const HalfInt arg = s + c.abs();
    if (!arg.is_integer()) {
      throw Error(ErrorCode::NotInRing, "s + |c_j| = " + arg.to_string() + " is not an integer");
    }
    // e^{-pi i m / 2} = i^{-m}
    acc *= ExactScalar::ipow(-arg.as_int()) * gamma_complex(arg);
  }
  return acc;
}

HalfInt right_point(const ZetaContext& ctx) { return half(ctx.k() - ctx.n() + 1); }
HalfInt left_point(const ZetaContext& ctx) { return half(ctx.n() - ctx.k() + 1); }

ExactScalar euler_right_expanded(const ZetaContext& ctx) {
  const std::int64_t a = ctx.a();
  const std::int64_t b = ctx.b();
  const std::vector<std::int64_t> ns = nu_star(ctx.wt);
  const std::int64_t expo = -sum(ctx.wt.tau) - sum(ns) - a * ctx.k_minus() - b * ctx.k_plus() +
                            (a * (a - 1) + b * (b - 1)) / 2 + 2 * a * b;
  // (2 pi i)^expo
  ExactScalar acc = ExactScalar::pow2(HalfInt::from_int(ctx.n())) *
                    ExactScalar::make(Rational(1), HalfInt::from_int(expo), HalfInt::from_int(expo), expo);
  for (std::int64_t j = 1; j <= a; ++j) {
    acc *= gamma_exact(HalfInt::from_int(ctx.wt.tau[j - 1] + 1 - j + ctx.k_minus() - b));
  }
  for (std::int64_t j = 1; j <= b; ++j) {
    acc *= gamma_exact(HalfInt::from_int(ns[j - 1] + 1 - j + ctx.k_plus() - a));
  }
  return acc;
}

ExactScalar gamma_factor_from_euler(const ZetaContext& ctx) {
  const std::int64_t a = ctx.a();
  const std::int64_t b = ctx.b();
  const ExactScalar e_left = euler_factor(left_point(ctx), ctx);
  const ExactScalar e_right = euler_factor(right_point(ctx), ctx);
  const std::int64_t sign_exp = sum(ctx.wt.tau) + sum(ctx.wt.nu) + a * ctx.k_plus() + b * ctx.k_minus();
  const ExactScalar factor = ExactScalar::sign(sign_exp) * ExactScalar::ipow(-a * a - b * b);
  return e_left / (factor * e_right);
}

}  // namespace archzeta
