#include "archzeta/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

#include "archzeta/errors.hpp"
#include "archzeta/lfactors.hpp"
#include "archzeta/ratfun.hpp"
#include "archzeta/repdims.hpp"

namespace archzeta {

namespace {

std::int64_t sum(const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

std::int64_t floor_half(std::int64_t n) { return n / 2; }

void require_k_condition(const ZetaContext& ctx) {
  const KConditionCheck check = check_k_condition(ctx);
  if (!check.ok) throw Error(ErrorCode::ConditionViolated, check.diagnostic);
}

ExactScalar int_scalar(const BigInt& v) { return ExactScalar::from_rational(Rational(v)); }

// (c * pi * i)^e with c = 2 or -2 folded into exponents.
ExactScalar two_pi_i_pow(std::int64_t e, bool negative = false) {
  return ExactScalar::make(Rational(1), HalfInt::from_int(e), HalfInt::from_int(e), (negative ? 3 : 1) * e);
}

ExactScalar superfactorial(std::int64_t m) {
  ExactScalar acc;
  for (std::int64_t j = 1; j <= m; ++j) acc *= int_scalar(gamma_int(j));
  return acc;
}

}  // namespace

const char* route_name(Route r) {
  switch (r) {
    case Route::Form1: return "form1";
    case Route::Chain: return "chain";
    case Route::Form2: return "form2";
    case Route::LeftDisplay: return "display";
    case Route::LeftFuncEq: return "funceq";
  }
  return "?";
}

Route parse_route(std::string_view text) {
  if (text == "form1") return Route::Form1;
  if (text == "chain") return Route::Chain;
  if (text == "form2") return Route::Form2;
  if (text == "display") return Route::LeftDisplay;
  if (text == "funceq") return Route::LeftFuncEq;
  throw Error(ErrorCode::InvalidArgument, "unknown route '" + std::string(text) + "'");
}

const char* side_name(Side s) { return s == Side::Right ? "right" : "left"; }

Side parse_side(std::string_view text) {
  if (text == "right") return Side::Right;
  if (text == "left") return Side::Left;
  throw Error(ErrorCode::InvalidArgument, "unknown side '" + std::string(text) + "'");
}

std::int64_t twist_exponent(const ZetaContext& ctx) {
  return -sum(ctx.wt.tau) - sum(nu_star(ctx.wt)) + ctx.a() * ctx.k_plus() + ctx.b() * ctx.k_minus();
}

ExactScalar mc_closed(const ZetaContext& ctx) {
  require_k_condition(ctx);
  const std::int64_t a = ctx.a();
  const std::int64_t b = ctx.b();
  const std::vector<std::int64_t> ns = nu_star(ctx.wt);
  ExactScalar acc = ExactScalar::pow_pi(HalfInt::from_int(twist_exponent(ctx))) /
                    (superfactorial(a) * superfactorial(b));
  for (std::int64_t j = 1; j <= a; ++j) acc *= int_scalar(gamma_int(ctx.wt.tau[j - 1] - ctx.k_plus() + a - j + 1));
  for (std::int64_t j = 1; j <= b; ++j) acc *= int_scalar(gamma_int(ns[j - 1] - ctx.k_minus() + b - j + 1));
  return acc;
}

ZetaValue zeta_right_form1(const ZetaContext& ctx) {
  require_k_condition(ctx);
  const std::int64_t a = ctx.a();
  const std::int64_t b = ctx.b();
  const std::vector<std::int64_t> ns = nu_star(ctx.wt);
  ExactScalar acc = ExactScalar::make(Rational(1), half(2 * a * b - ctx.n()), HalfInt::from_int(a * b), 0);
  acc *= two_pi_i_pow(twist_exponent(ctx));
  acc /= int_scalar(dim_gl_pair(ctx));
  for (std::int64_t j = 1; j <= a; ++j) acc *= int_scalar(gamma_int(ctx.wt.tau[j - 1] - j + ctx.k_minus() - b + 1));
  for (std::int64_t j = 1; j <= b; ++j) acc *= int_scalar(gamma_int(ns[j - 1] - j + ctx.k_plus() - a + 1));
  for (std::int64_t j = 1; j <= ctx.n(); ++j) acc /= int_scalar(gamma_int(ctx.k() - j + 1));
  return {acc, Route::Form1};
}

ZetaValue zeta_right_chain(const ZetaContext& ctx) {
  require_k_condition(ctx);
  const std::int64_t x = twist_exponent(ctx);
  // (2i)^x
  ExactScalar acc = ExactScalar::make(Rational(1), HalfInt::from_int(x), HalfInt(), x);
  acc /= int_scalar(dim_gl_pair(ctx));
  acc *= int_scalar(dim_lambda_closed(ctx));
  acc /= formal_degree(ctx.wt, ctx.sig);
  acc *= mc_closed(ctx);
  return {acc, Route::Chain};
}

ExactScalar norm_factor(Side side, std::int64_t n, std::int64_t k) {
  if (n < 1 || k < n) throw Error(ErrorCode::InvalidArgument, "norm_factor needs k >= n >= 1");
  ExactScalar acc = ExactScalar::pow2(HalfInt::from_int(n * (n - 1)));
  if (side == Side::Right) {
    acc *= ExactScalar::pow_pi(half(n * (n - 1)));
    acc *= two_pi_i_pow(-n * k, true);
    for (std::int64_t j = 1; j <= n; ++j) acc *= int_scalar(gamma_int(k + 1 - j));
  } else {
    acc *= ExactScalar::pow_pi(half(-n * (n + 1)));
    acc *= ExactScalar::ipow(n * k);
    for (std::int64_t j = 1; j <= n; ++j) acc *= int_scalar(gamma_int(j));
  }
  return acc;
}

ExactScalar w_coefficient(Side side, std::int64_t n, std::int64_t k) {
  return norm_factor(side, n, k).inverse();
}

ZetaValue zeta_right_form2(const ZetaContext& ctx) {
  require_k_condition(ctx);
  const std::int64_t n = ctx.n();
  const std::int64_t ab = ctx.a() * ctx.b();
  ExactScalar acc = ExactScalar::pow2(half(n * n - 2 * n));
  acc *= ExactScalar::ipow(-(n * (n - 1)) / 2 - ab);
  acc *= ExactScalar::sign(n * ctx.r());
  acc /= int_scalar(dim_gl_pair(ctx));
  acc *= euler_factor(right_point(ctx), ctx);
  acc /= norm_factor(Side::Right, n, ctx.k());
  return {acc, Route::Form2};
}

ZetaValue zeta_left_display(const ZetaContext& ctx) {
  require_k_condition(ctx);
  const std::int64_t n = ctx.n();
  const std::int64_t a = ctx.a();
  const std::int64_t b = ctx.b();
  ExactScalar acc = ExactScalar::pow2(half(n * n - 2 * n));
  acc *= ExactScalar::ipow((n * (n + 1)) / 2 + a * b);
  acc *= ExactScalar::sign(n * ctx.r() + a * ctx.k_plus() + b * ctx.k_minus() + (n + 1) * floor_half(n));
  acc /= int_scalar(dim_gl_pair(ctx));
  acc *= euler_factor(left_point(ctx), ctx);
  acc /= norm_factor(Side::Left, n, ctx.k());
  return {acc, Route::LeftDisplay};
}

ExactScalar c_ratio_cached(std::int64_t n, std::int64_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, std::int64_t>, ExactScalar> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({n, k}); it != cache.end()) return it->second;
  }
  const ExactScalar v = c_ratio(n, k);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(n, k), v);
  return v;
}

ZetaValue zeta_left_funceq(const ZetaContext& ctx) {
  require_k_condition(ctx);
  const std::int64_t n = ctx.n();
  ExactScalar acc = w_coefficient(Side::Left, n, ctx.k());
  acc *= ExactScalar::sign(sum(ctx.wt.tau) + sum(nu_star(ctx.wt)) + floor_half(n) * ctx.r());
  acc *= c_ratio_cached(n, ctx.k());
  acc *= gamma_factor_from_euler(ctx);
  acc *= zeta_right_form1(ctx).value;
  acc /= w_coefficient(Side::Right, n, ctx.k());
  return {acc, Route::LeftFuncEq};
}

ZetaValue zeta_value(const ZetaContext& ctx, Route route) {
  switch (route) {
    case Route::Form1: return zeta_right_form1(ctx);
    case Route::Chain: return zeta_right_chain(ctx);
    case Route::Form2: return zeta_right_form2(ctx);
    case Route::LeftDisplay: return zeta_left_display(ctx);
    case Route::LeftFuncEq: return zeta_left_funceq(ctx);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown route");
}

bool AuditReport::structural() const {
  return std::all_of(ratios.begin(), ratios.end(), [](const AuditRatio& r) { return r.structural(); });
}

AuditReport audit_context(const ZetaContext& ctx) {
  AuditReport rep{ctx, {}};
  const ExactScalar form1 = zeta_right_form1(ctx).value;
  const ExactScalar form2 = zeta_right_form2(ctx).value;
  const ExactScalar display = zeta_left_display(ctx).value;
  const ExactScalar funceq = zeta_left_funceq(ctx).value;
  auto add = [&](std::string name, const ExactScalar& v) {
    rep.ratios.push_back({std::move(name), v, v.coeff() == 1, v.pow_pi_exp() == HalfInt()});
  };
  add("form2/form1", form2 / form1);
  add("funceq/display", funceq / display);
  if (ctx.k() == ctx.n()) {
    add("display/form1", display / form1);
    add("funceq/form1", funceq / form1);
  }
  return rep;
}

std::vector<AuditReport> audit(const std::vector<ZetaContext>& sweep, unsigned threads) {
  std::vector<AuditReport> out(sweep.size());
  std::vector<std::exception_ptr> errors(sweep.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < sweep.size(); i = next++) {
      try {
        out[i] = audit_context(sweep[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned t = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < t; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<std::pair<std::string, std::size_t>> order;
  order.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) order.emplace_back(out[i].ctx.key(), i);
  std::sort(order.begin(), order.end());
  std::vector<AuditReport> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, i] : order) sorted.push_back(std::move(out[i]));

  for (const AuditReport& rep : sorted) {
    for (const AuditRatio& r : rep.ratios) {
      if (!r.structural()) {
        throw Error(ErrorCode::AuditStructuralFailure,
                    rep.ctx.key() + ": ratio " + r.name + " = " + r.value.to_string() + " is not a 2-power times i-power");
      }
    }
  }
  return sorted;
}

std::map<std::string, bool> audit_weight_independence(const std::vector<AuditReport>& reports) {
  using Key = std::tuple<std::string, std::int64_t, std::int64_t, std::int64_t, std::int64_t>;
  std::map<Key, ExactScalar> seen;
  std::map<std::string, bool> out;
  for (const AuditReport& rep : reports) {
    for (const AuditRatio& r : rep.ratios) {
      auto [flag, fresh] = out.emplace(r.name, true);
      const Key key{r.name, rep.ctx.a(), rep.ctx.b(), rep.ctx.k(), rep.ctx.r()};
      auto [it, inserted] = seen.emplace(key, r.value);
      if (!inserted && !(it->second == r.value)) flag->second = false;
    }
  }
  return out;
}

}  // namespace archzeta
