#include "archzeta/weights.hpp"

#include <algorithm>
#include <sstream>

#include "archzeta/errors.hpp"

namespace archzeta {

namespace {

bool weakly_decreasing(const std::vector<std::int64_t>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::int64_t floor_div(std::int64_t x, std::int64_t d) {
  std::int64_t q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
  return q;
}

}  // namespace

void Signature::validate() const {
  if (a < 0 || b < 0) throw Error(ErrorCode::InvalidArgument, "signature entries must be non-negative");
  if (a + b < 1) throw Error(ErrorCode::InvalidArgument, "signature must have n = a + b >= 1");
}

void DiscreteSeriesWeight::validate(const Signature& sig) const {
  if (static_cast<std::int64_t>(tau.size()) != sig.a) {
    throw Error(ErrorCode::InvalidArgument, "tau has length " + std::to_string(tau.size()) +
                                                " but signature has a = " + std::to_string(sig.a));
  }
  if (static_cast<std::int64_t>(nu.size()) != sig.b) {
    throw Error(ErrorCode::InvalidArgument, "nu has length " + std::to_string(nu.size()) +
                                                " but signature has b = " + std::to_string(sig.b));
  }
  if (!weakly_decreasing(tau)) throw Error(ErrorCode::InvalidArgument, "tau must be weakly decreasing");
  if (!weakly_decreasing(nu)) throw Error(ErrorCode::InvalidArgument, "nu must be weakly decreasing");
}

std::string ZetaContext::key() const {
  std::ostringstream out;
  out << "a=" << sig.a << " b=" << sig.b << " tau=(" << join(wt.tau) << ") nu=(" << join(wt.nu)
      << ") k=" << tw.k << " r=" << tw.r;
  return out.str();
}

KConditionCheck check_k_condition(const ZetaContext& ctx) {
  const std::int64_t k = ctx.k();
  const std::int64_t r = ctx.r();
  if (((k - r) % 2 + 2) % 2 != 0) return {false, "k parity violates k ≡ r (mod 2)"};
  if (k < ctx.n()) return {false, "k = " + std::to_string(k) + " is below n = " + std::to_string(ctx.n())};
  // 2*tau_a >= k + r and 2*nu_1 <= -(k - r)
  if (ctx.a() > 0 && !ctx.wt.tau.empty() && 2 * ctx.wt.tau.back() < k + r) {
    return {false, "tau_a = " + std::to_string(ctx.wt.tau.back()) + " is below (k+r)/2"};
  }
  if (ctx.b() > 0 && !ctx.wt.nu.empty() && 2 * ctx.wt.nu.front() > -(k - r)) {
    return {false, "nu_1 = " + std::to_string(ctx.wt.nu.front()) + " exceeds -(k-r)/2"};
  }
  return {true, {}};
}

ZetaContext make_context(Signature sig, DiscreteSeriesWeight wt, TwistParams tw) {
  sig.validate();
  wt.validate(sig);
  ZetaContext ctx{sig, std::move(wt), tw};
  const KConditionCheck check = check_k_condition(ctx);
  if (!check.ok) throw Error(ErrorCode::ConditionViolated, check.diagnostic);
  return ctx;
}

std::vector<std::int64_t> nu_star(const DiscreteSeriesWeight& wt) {
  std::vector<std::int64_t> out(wt.nu.rbegin(), wt.nu.rend());
  for (auto& x : out) x = -x;
  return out;
}

DualWeight dual_weight(const DiscreteSeriesWeight& wt, const Signature& sig) {
  wt.validate(sig);
  DualWeight d;
  d.tau_star.assign(wt.tau.rbegin(), wt.tau.rend());
  for (auto& x : d.tau_star) x = -x;
  d.nu_star = nu_star(wt);
  return d;
}

std::vector<HalfInt> hc_parameter(const DiscreteSeriesWeight& wt, const Signature& sig) {
  wt.validate(sig);
  std::vector<HalfInt> out;
  out.reserve(static_cast<std::size_t>(sig.n()));
  for (std::int64_t j = 1; j <= sig.a; ++j) {
    out.push_back(HalfInt::from_int(wt.tau[j - 1]) + half(sig.a - sig.b + 1 - 2 * j));
  }
  for (std::int64_t j = 1; j <= sig.b; ++j) {
    out.push_back(HalfInt::from_int(wt.nu[j - 1]) + half(sig.a + sig.b + 1 - 2 * j));
  }
  return out;
}

std::vector<HalfInt> shifted_parameters(const DiscreteSeriesWeight& wt, const Signature& sig,
                                        std::int64_t r) {
  std::vector<HalfInt> c = hc_parameter(wt, sig);
  for (auto& x : c) x -= half(r);
  return c;
}

bool CriticalSet::contains(HalfInt s0) const {
  if (empty()) return false;
  if ((s0 - offset).halves() % 2 != 0) return false;
  return lower <= s0 && s0 <= upper;
}

std::vector<HalfInt> CriticalSet::points() const {
  std::vector<HalfInt> out;
  for (HalfInt s = lower; s <= upper; s += HalfInt::from_int(1)) out.push_back(s);
  return out;
}

CriticalSet critical_points(const DiscreteSeriesWeight& wt, const Signature& sig, std::int64_t r) {
  const std::vector<HalfInt> c = shifted_parameters(wt, sig, r);
  // s0 + (r+n-1)/2 in Z  <=>  s0 = -(r+n-1)/2 mod 1
  const std::int64_t parity = ((-(r + sig.n() - 1)) % 2 + 2) % 2;
  CriticalSet set;
  set.offset = half(parity);

  HalfInt lo = -c.front().abs() + HalfInt::from_int(1);
  HalfInt hi = c.front().abs();
  for (const HalfInt& cj : c) {
    lo = std::max(lo, -cj.abs() + HalfInt::from_int(1));
    hi = std::min(hi, cj.abs());
  }
  // Round lo up and hi down onto the lattice offset + Z (in halves: step 2).
  auto snap_up = [&](HalfInt x) {
    const std::int64_t t = x.halves() - parity;
    return half(parity + 2 * -floor_div(-t, 2));
  };
  auto snap_down = [&](HalfInt x) {
    const std::int64_t t = x.halves() - parity;
    return half(parity + 2 * floor_div(t, 2));
  };
  set.lower = snap_up(lo);
  set.upper = snap_down(hi);
  return set;
}

}  // namespace archzeta
