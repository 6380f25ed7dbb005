#include "archzeta/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "archzeta/errors.hpp"
#include "archzeta/lfactors.hpp"
#include "archzeta/ratfun.hpp"
#include "archzeta/repdims.hpp"
#include "archzeta/zeta.hpp"

namespace archzeta {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Runs fn, recording a failure with the context key when it returns false or throws.
void check(SuiteResult& res, const std::string& label, const std::function<bool(std::string&)>& fn) {
  ++res.checks;
  std::string detail;
  try {
    if (fn(detail)) return;
  } catch (const Error& e) {
    detail = std::string(error_code_name(e.code())) + ": " + e.what();
  }
  res.failures.push_back(label + (detail.empty() ? "" : " -- " + detail));
}

std::vector<GLWeight> gl_grid(std::int64_t max_m, std::int64_t lo, std::int64_t hi) {
  std::vector<GLWeight> out;
  GLWeight cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t m, std::int64_t upper) {
    if (static_cast<std::int64_t>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = upper; v >= lo; --v) {
      cur.push_back(v);
      rec(m, v);
      cur.pop_back();
    }
  };
  for (std::int64_t m = 1; m <= max_m; ++m) rec(m, hi);
  return out;
}

std::string weight_text(const GLWeight& w) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  out << ")";
  return out.str();
}

}  // namespace

SuiteResult verify_identities(const SweepSpec& spec) {
  Timer t;
  SuiteResult res;
  res.name = "identities";
  for (const ZetaContext& ctx : generate_sweep(spec)) {
    check(res, ctx.key() + " form1 == chain", [&](std::string& d) {
      const ExactScalar f1 = zeta_right_form1(ctx).value;
      const ExactScalar ch = zeta_right_chain(ctx).value;
      d = f1.to_string() + " vs " + ch.to_string();
      return f1 == ch;
    });
    check(res, ctx.key() + " euler expansion", [&](std::string& d) {
      const ExactScalar e = euler_factor(right_point(ctx), ctx);
      const ExactScalar x = euler_right_expanded(ctx);
      d = e.to_string() + " vs " + x.to_string();
      return e == x;
    });
  }
  res.seconds = t.seconds();
  return res;
}

SuiteResult verify_dims(const SweepSpec& spec) {
  Timer t;
  SuiteResult res;
  res.name = "dims";
  for (const GLWeight& w : gl_grid(4, -6, 6)) {
    check(res, "weyl == GT " + weight_text(w), [&](std::string& d) {
      const BigInt x = weyl_dim(w);
      const BigInt y = gt_dim_oracle(w);
      d = x.str() + " vs " + y.str();
      return x == y;
    });
  }
  SweepSpec capped = spec;
  capped.max_k = spec.max_k ? std::min<std::int64_t>(*spec.max_k, 6) : 6;
  for (const ZetaContext& ctx : generate_sweep(capped)) {
    check(res, ctx.key() + " dim lambda", [&](std::string& d) {
      const BigInt x = dim_lambda_closed(ctx);
      const BigInt y = weyl_dim(lambda_weight(ctx));
      d = x.str() + " vs " + y.str();
      return x == y;
    });
    check(res, ctx.key() + " dim/degree", [&](std::string& d) {
      const ExactScalar x = dfd_ratio(ctx);
      const ExactScalar y = ExactScalar::from_rational(Rational(dim_lambda_closed(ctx))) / formal_degree(ctx.wt, ctx.sig);
      d = x.to_string() + " vs " + y.to_string();
      return x == y;
    });
  }
  res.seconds = t.seconds();
  return res;
}

SuiteResult verify_cratio() {
  Timer t;
  SuiteResult res;
  res.name = "cratio";
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t k = n; k <= n + 6; ++k) {
      check(res, "c_ratio(" + std::to_string(n) + "," + std::to_string(k) + ")", [&](std::string& d) {
        const ExactScalar v = c_ratio(n, k);
        const ExactScalar expect = ExactScalar::sign((k + n + 1) * (n / 2));
        d = v.to_string() + " vs " + expect.to_string();
        return v == expect;
      });
    }
  }
  res.seconds = t.seconds();
  return res;
}

std::vector<ZetaContext> oracle_contexts() {
  return {
      make_context({1, 1}, {{1}, {-1}}, {2, 0}),
      make_context({1, 1}, {{3}, {-3}}, {4, 0}),
      make_context({2, 1}, {{2, 2}, {-1}}, {3, 1}),
      make_context({1, 2}, {{1}, {-2, -2}}, {3, -1}),
      make_context({2, 2}, {{2, 2}, {-2, -2}}, {4, 0}),
  };
}

ZetaContext pi_ratio_context() { return make_context({2, 1}, {{3, 2}, {-3}}, {3, 1}); }

SuiteResult verify_oracle(const OracleConfig& cfg) {
  Timer t;
  SuiteResult res;
  res.name = "oracle";
  for (const ZetaContext& ctx : oracle_contexts()) {
    check(res, ctx.key() + " MC(I) vs closed form", [&](std::string& d) {
      const MinorPolynomial p(PolyKind::I, ctx);
      const MCEstimate est = mc_estimate(p, cfg);
      const double exact = mc_closed(ctx).to_complex().real();
      const double z = est.stderr_ > 0 ? (est.mean - exact) / est.stderr_ : (est.mean == exact ? 0.0 : INFINITY);
      std::ostringstream out;
      out << "mean " << est.mean << " stderr " << est.stderr_ << " exact " << exact << " z " << z;
      d = out.str();
      res.notes.push_back(ctx.key() + ": " + d);
      return std::abs(est.mean - exact) <= 4.0 * est.stderr_ && est.stderr_ <= 0.02 * std::abs(exact);
    });
  }
  const ZetaContext pc = pi_ratio_context();
  check(res, pc.key() + " I / (Q x Q~) ratio", [&](std::string& d) {
    const PiRatioReport rep = verify_pi_ratio(pc, cfg, PairingConvention::Aligned);
    std::ostringstream out;
    out << "ratio " << rep.ratio << " stderr " << rep.ratio_stderr << " target " << rep.target << " z "
        << rep.z_score;
    d = out.str();
    res.notes.push_back(pc.key() + " aligned pairing: " + d);
    return std::abs(rep.z_score) <= 4.0;
  });
  try {
    const PiRatioReport lit = verify_pi_ratio(pc, cfg, PairingConvention::Literal);
    std::ostringstream out;
    out << "literal pairing: ratio " << lit.ratio << " target " << lit.target;
    res.notes.push_back(out.str());
  } catch (const Error& e) {
    res.notes.push_back(std::string("literal pairing: ") + error_code_name(e.code()) + ": " + e.what());
  }
  res.seconds = t.seconds();
  return res;
}

SuiteResult verify_audit(const SweepSpec& spec, unsigned threads) {
  Timer t;
  SuiteResult res;
  res.name = "audit";
  const std::vector<ZetaContext> sweep = generate_sweep(spec);
  res.checks = sweep.size();
  try {
    const std::vector<AuditReport> reports = audit(sweep, threads);
    for (const auto& [name, indep] : audit_weight_independence(reports)) {
      res.notes.push_back(name + (indep ? " depends only on (a,b,k,r)" : " varies with the weight"));
    }
  } catch (const Error& e) {
    res.failures.push_back(std::string(error_code_name(e.code())) + ": " + e.what());
  }
  res.seconds = t.seconds();
  return res;
}

}  // namespace archzeta
