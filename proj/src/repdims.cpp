#include "archzeta/repdims.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "archzeta/errors.hpp"

namespace archzeta {

namespace {

void require_dominant(const GLWeight& w) {
  if (!std::is_sorted(w.rbegin(), w.rend())) {
    throw Error(ErrorCode::InvalidArgument, "GL weight must be weakly decreasing");
  }
}

void require_k_condition(const ZetaContext& ctx) {
  const KConditionCheck check = check_k_condition(ctx);
  if (!check.ok) throw Error(ErrorCode::ConditionViolated, check.diagnostic);
}

Rational gamma_q(std::int64_t x) { return Rational(gamma_int(x)); }

// prod_{i<j<=a}(tau_i-tau_j-i+j) prod_{i<j<=b}(nu*_i-nu*_j-i+j) prod_{i,j}(tau_i+nu*_j+1-i-j)
BigInt weight_products(const DiscreteSeriesWeight& wt, const Signature& sig) {
  const std::vector<std::int64_t> ns = nu_star(wt);
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= sig.a; ++i) {
    for (std::int64_t j = i + 1; j <= sig.a; ++j) acc *= wt.tau[i - 1] - wt.tau[j - 1] - i + j;
  }
  for (std::int64_t i = 1; i <= sig.b; ++i) {
    for (std::int64_t j = i + 1; j <= sig.b; ++j) acc *= ns[i - 1] - ns[j - 1] - i + j;
  }
  for (std::int64_t i = 1; i <= sig.a; ++i) {
    for (std::int64_t j = 1; j <= sig.b; ++j) {
      const std::int64_t f = wt.tau[i - 1] + ns[j - 1] + 1 - i - j;
      if (f <= 0) {
        throw Error(ErrorCode::NonPositiveArgument,
                    "cross factor tau_i + nu*_j + 1 - i - j = " + std::to_string(f) + " is not positive");
      }
      acc *= f;
    }
  }
  return acc;
}

// prod_j Gamma(tau_j-j+(k-r)/2-b+1)/Gamma(tau_j-j-(k+r)/2+a+1)
//   * prod_j Gamma(nu*_j-j+(k+r)/2-a+1)/Gamma(nu*_j-j-(k-r)/2+b+1)
Rational gamma_quotients(const ZetaContext& ctx) {
  const std::int64_t a = ctx.a();
  const std::int64_t b = ctx.b();
  const std::vector<std::int64_t> ns = nu_star(ctx.wt);
  Rational acc = 1;
  for (std::int64_t j = 1; j <= a; ++j) {
    const std::int64_t t = ctx.wt.tau[j - 1];
    acc *= gamma_q(t - j + ctx.k_minus() - b + 1) / gamma_q(t - j - ctx.k_plus() + a + 1);
  }
  for (std::int64_t j = 1; j <= b; ++j) {
    const std::int64_t v = ns[j - 1];
    acc *= gamma_q(v - j + ctx.k_plus() - a + 1) / gamma_q(v - j - ctx.k_minus() + b + 1);
  }
  return acc;
}

BigInt superfactorial(std::int64_t m) {
  BigInt acc = 1;
  for (std::int64_t j = 1; j <= m; ++j) acc *= gamma_int(j);
  return acc;
}

}  // namespace

BigInt gamma_int(std::int64_t x) {
  if (x <= 0) throw Error(ErrorCode::NonPositiveArgument, "Gamma at non-positive integer " + std::to_string(x));
  return factorial(x - 1);
}

BigInt weyl_dim(const GLWeight& w) {
  require_dominant(w);
  BigInt num = 1;
  BigInt den = 1;
  const std::size_t m = w.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      num *= w[i] - w[j] + static_cast<std::int64_t>(j - i);
      den *= static_cast<std::int64_t>(j - i);
    }
  }
  return num / den;
}

BigInt gt_dim_oracle(const GLWeight& w) {
  require_dominant(w);
  if (w.size() > 5) throw Error(ErrorCode::BoundExceeded, "GT enumeration limited to m <= 5");
  for (std::int64_t x : w) {
    if (x < -12 || x > 12) throw Error(ErrorCode::BoundExceeded, "GT enumeration limited to entries in [-12, 12]");
  }
  if (w.empty()) return 1;
  const std::int64_t shift = w.back();
  GLWeight top(w);
  for (auto& x : top) x -= shift;

  thread_local std::map<GLWeight, BigInt> memo;
  std::function<BigInt(const GLWeight&)> count = [&](const GLWeight& row) -> BigInt {
    if (row.size() <= 1) return 1;
    if (auto it = memo.find(row); it != memo.end()) return it->second;
    // next row y interlaces: row[i] >= y[i] >= row[i+1]
    GLWeight y(row.size() - 1);
    BigInt total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == y.size()) {
        total += count(y);
        return;
      }
      for (std::int64_t v = row[i + 1]; v <= row[i]; ++v) {
        y[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    memo.emplace(row, total);
    return total;
  };
  return count(top);
}

GLWeight lambda_weight(const ZetaContext& ctx) {
  require_k_condition(ctx);
  GLWeight out(static_cast<std::size_t>(ctx.k()), 0);
  for (std::int64_t j = 0; j < ctx.a(); ++j) out[j] = ctx.wt.tau[j] - ctx.k_plus();
  const std::int64_t off = ctx.k() - ctx.b();
  for (std::int64_t j = 0; j < ctx.b(); ++j) out[off + j] = ctx.wt.nu[j] + ctx.k_minus();
  return out;
}

BigInt dim_lambda_closed(const ZetaContext& ctx) {
  require_k_condition(ctx);
  Rational acc = gamma_quotients(ctx) * Rational(weight_products(ctx.wt, ctx.sig));
  for (std::int64_t j = 1; j <= ctx.n(); ++j) acc /= gamma_q(ctx.k() - j + 1);
  if (denominator(acc) != 1) {
    throw Error(ErrorCode::NotConstant, "dimension product is not an integer: " + rational_to_string(acc));
  }
  return numerator(acc);
}

BigInt dim_gl_pair(const ZetaContext& ctx) { return weyl_dim(ctx.wt.tau) * weyl_dim(ctx.wt.nu); }

ExactScalar formal_degree(const DiscreteSeriesWeight& wt, const Signature& sig) {
  sig.validate();
  wt.validate(sig);
  const std::int64_t a = sig.a;
  const std::int64_t b = sig.b;
  const Rational num(weight_products(wt, sig));
  const Rational den(superfactorial(a) * superfactorial(b));
  return ExactScalar::make(num / den, -half(2 * a * b - sig.n()), HalfInt::from_int(-a * b), 0);
}

ExactScalar dfd_ratio(const ZetaContext& ctx) {
  require_k_condition(ctx);
  const std::int64_t a = ctx.a();
  const std::int64_t b = ctx.b();
  Rational q = Rational(superfactorial(a) * superfactorial(b)) * gamma_quotients(ctx);
  for (std::int64_t j = 1; j <= ctx.n(); ++j) q /= gamma_q(ctx.k() - j + 1);
  return ExactScalar::make(q, half(2 * a * b - ctx.n()), HalfInt::from_int(a * b), 0);
}

}  // namespace archzeta
