#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "archzeta/errors.hpp"
#include "archzeta/exact.hpp"
#include "archzeta/io.hpp"
#include "archzeta/lfactors.hpp"
#include "archzeta/oracle.hpp"
#include "archzeta/ratfun.hpp"
#include "archzeta/repdims.hpp"
#include "archzeta/sweep.hpp"
#include "archzeta/verify.hpp"
#include "archzeta/weights.hpp"
#include "archzeta/zeta.hpp"

using namespace archzeta;
using nlohmann::json;

namespace {

struct Params {
  std::string sig;
  std::string tau;
  std::string nu;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> r;
  std::string s;
  bool json = false;
  std::string side = "right";
  std::string route;
  std::string weight;
  std::int64_t n = 0;
  std::string poly = "I";
  std::string convention = "aligned";
  std::uint64_t samples = 2'000'000;
  std::uint64_t batch = 20'000;
  std::uint64_t seed = 7;
  unsigned threads = 1;
  std::string sweep = "standard";
  std::string suite = "all";
};

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::InvalidArgument, flag + ": '" + item + "' is not an integer");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

Signature parse_sig(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "--sig is required (a,b)");
  const auto v = parse_int_list(text, "--sig");
  if (v.size() != 2) throw Error(ErrorCode::InvalidArgument, "--sig expects two integers a,b");
  Signature sig{v[0], v[1]};
  sig.validate();
  return sig;
}

DiscreteSeriesWeight parse_weight(const Params& p, const Signature& sig) {
  DiscreteSeriesWeight wt{parse_int_list(p.tau, "--tau"), parse_int_list(p.nu, "--nu")};
  wt.validate(sig);
  return wt;
}

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is required");
  return *v;
}

ZetaContext parse_context(const Params& p) {
  const Signature sig = parse_sig(p.sig);
  return make_context(sig, parse_weight(p, sig), {need(p.k, "--k"), need(p.r, "--r")});
}

HalfInt parse_s(const std::string& text) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidArgument, "--s: " + std::string(e.what()));
  }
  const Rational twice = q * 2;
  if (denominator(twice) != 1) throw Error(ErrorCode::InvalidArgument, "--s must be a half-integer, got " + text);
  return HalfInt::from_halves(numerator(twice).convert_to<std::int64_t>());
}

void emit_scalar(const Params& p, const std::string& command, const ExactScalar& x, json extra = json::object()) {
  if (p.json) {
    json j = {{"schema", kSchema}, {"command", command}, {"status", "ok"}, {"text", x.to_string()}, {"value", to_json(x)}};
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << x.to_string() << "\n";
  }
}

std::string list_text(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

int run_lfactor(const Params& p) {
  const Signature sig = parse_sig(p.sig);
  const DiscreteSeriesWeight wt = parse_weight(p, sig);
  if (p.s.empty()) throw Error(ErrorCode::InvalidArgument, "--s is required");
  emit_scalar(p, "lfactor", l_factor(parse_s(p.s), wt, sig, need(p.r, "--r")));
  return 0;
}

int run_euler(const Params& p) {
  const ZetaContext ctx = parse_context(p);
  HalfInt s;
  if (!p.s.empty()) {
    s = parse_s(p.s);
  } else {
    s = parse_side(p.side) == Side::Right ? right_point(ctx) : left_point(ctx);
  }
  emit_scalar(p, "euler", euler_factor(s, ctx), {{"s", s.to_string()}});
  return 0;
}

int run_zeta(const Params& p) {
  const ZetaContext ctx = parse_context(p);
  const Side side = parse_side(p.side);
  Route route = side == Side::Right ? Route::Form1 : Route::LeftFuncEq;
  if (!p.route.empty()) route = parse_route(p.route);
  const bool right_route = route == Route::Form1 || route == Route::Chain || route == Route::Form2;
  if (right_route != (side == Side::Right)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("--route ") + route_name(route) + " is not available on side " + side_name(side));
  }
  emit_scalar(p, "zeta", zeta_value(ctx, route).value, {{"side", side_name(side)}, {"route", route_name(route)}});
  return 0;
}

int run_dims(const Params& p) {
  if (!p.weight.empty()) {
    const GLWeight w = parse_int_list(p.weight, "--weight");
    const BigInt d = weyl_dim(w);
    std::optional<BigInt> gt;
    try {
      gt = gt_dim_oracle(w);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundExceeded) throw;
    }
    if (p.json) {
      json j = {{"schema", kSchema}, {"command", "dims"}, {"status", "ok"}, {"weight", w}, {"weyl", d.str()}};
      j["gt"] = gt ? json(gt->str()) : json(nullptr);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "weyl " << d << "\n";
      if (gt) std::cout << "gt " << *gt << "\n";
    }
    return 0;
  }
  const ZetaContext ctx = parse_context(p);
  const GLWeight lam = lambda_weight(ctx);
  const BigInt closed = dim_lambda_closed(ctx);
  const BigInt weyl = weyl_dim(lam);
  const BigInt dt = weyl_dim(ctx.wt.tau);
  const BigInt dn = weyl_dim(ctx.wt.nu);
  if (p.json) {
    std::cout << json{{"schema", kSchema},     {"command", "dims"},       {"status", "ok"},
                      {"lambda", lam},         {"dim_lambda", closed.str()}, {"weyl_lambda", weyl.str()},
                      {"dim_gl_tau", dt.str()}, {"dim_gl_nu", dn.str()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "lambda " << list_text(lam) << "\n"
              << "dim_lambda " << closed << "\n"
              << "weyl_lambda " << weyl << "\n"
              << "dim_gl_tau " << dt << "\n"
              << "dim_gl_nu " << dn << "\n";
  }
  return 0;
}

int run_formal_degree(const Params& p) {
  const Signature sig = parse_sig(p.sig);
  emit_scalar(p, "formal-degree", formal_degree(parse_weight(p, sig), sig));
  return 0;
}

int run_cratio(const Params& p) {
  if (p.n < 1) throw Error(ErrorCode::InvalidArgument, "--n must be at least 1");
  emit_scalar(p, "cratio", c_ratio(p.n, need(p.k, "--k")));
  return 0;
}

OracleConfig oracle_config(const Params& p) {
  OracleConfig cfg{p.samples, p.batch, p.seed, p.threads};
  cfg.validate();
  return cfg;
}

int run_oracle(const Params& p) {
  const ZetaContext ctx = parse_context(p);
  const PolyKind kind = parse_poly_kind(p.poly);
  const PairingConvention conv = parse_convention(p.convention);
  const MinorPolynomial poly(kind, ctx, conv);
  const std::string warning = variance_warning(poly);
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  const MCEstimate est = mc_estimate(poly, oracle_config(p));
  // MC(Q x Q~) = MC(I) / (dim tau dim nu) by the ratio identity
  ExactScalar target = mc_closed(ctx);
  if (kind == PolyKind::QQ) target /= ExactScalar::from_rational(Rational(dim_gl_pair(ctx)));
  const double exact = target.to_complex().real();
  const double z = est.stderr_ > 0 ? (est.mean - exact) / est.stderr_ : (est.mean == exact ? 0.0 : INFINITY);
  if (p.json) {
    json j = {{"schema", kSchema}, {"command", "oracle"}, {"status", "ok"},
              {"poly", poly_kind_name(kind)}, {"convention", convention_name(conv)},
              {"estimate", to_json(est)}, {"target", to_json(target)}, {"target_text", target.to_string()},
              {"z_score", std::isfinite(z) ? json(z) : json(nullptr)}};
    if (!warning.empty()) j["warning"] = warning;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "mean " << est.mean << "\nstderr " << est.stderr_ << "\ntarget " << target.to_string() << " ("
              << exact << ")\nz " << z << "\n";
  }
  return 0;
}

int run_audit(const Params& p) {
  const std::vector<ZetaContext> sweep = generate_sweep(SweepSpec::parse(p.sweep));
  const std::vector<AuditReport> reports = audit(sweep, p.threads);
  json arr = json::array();
  for (const AuditReport& r : reports) arr.push_back(to_json(r));
  json indep = json::object();
  for (const auto& [name, v] : audit_weight_independence(reports)) indep[name] = v;
  std::cout << json{{"schema", kSchema}, {"command", "audit"}, {"status", "ok"}, {"sweep", SweepSpec::parse(p.sweep).to_string()},
                    {"contexts", reports.size()}, {"weight_independent", indep}, {"reports", arr}}
                   .dump(2)
            << "\n";
  return 0;
}

int run_verify(const Params& p) {
  const SweepSpec spec = SweepSpec::parse(p.sweep);
  std::vector<SuiteResult> results;
  const std::string& s = p.suite;
  const bool all = s == "all";
  if (!all && s != "identities" && s != "dims" && s != "cratio" && s != "oracle" && s != "audit") {
    throw Error(ErrorCode::InvalidArgument, "--suite: unknown suite '" + s + "'");
  }
  if (all || s == "identities") results.push_back(verify_identities(spec));
  if (all || s == "dims") results.push_back(verify_dims(spec));
  if (all || s == "cratio") results.push_back(verify_cratio());
  if (all || s == "audit") results.push_back(verify_audit(spec, p.threads));
  if (all || s == "oracle") results.push_back(verify_oracle(oracle_config(p)));

  bool ok = true;
  json arr = json::array();
  for (const SuiteResult& r : results) {
    ok = ok && r.passed();
    arr.push_back({{"suite", r.name}, {"passed", r.passed()}, {"checks", r.checks}, {"failures", r.failures},
                   {"notes", r.notes}, {"seconds", r.seconds}});
    if (!p.json) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, " << r.seconds
                << " s)\n";
      for (const auto& f : r.failures) std::cout << "  fail: " << f << "\n";
      for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
    }
  }
  if (p.json) {
    std::cout << json{{"schema", kSchema}, {"command", "verify"}, {"status", ok ? "ok" : "fail"}, {"suites", arr}}.dump(2)
              << "\n";
  }
  return ok ? 0 : 2;
}

void add_context(CLI::App* sub, Params& p, bool with_k = true) {
  sub->add_option("--sig", p.sig, "signature a,b");
  sub->add_option("--tau", p.tau, "tau_1,...,tau_a");
  sub->add_option("--nu", p.nu, "nu_1,...,nu_b");
  if (with_k) sub->add_option("--k", p.k, "k");
  sub->add_option("--r", p.r, "r");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact evaluator for archimedean doubling zeta integrals of U(a,b)"};
  app.require_subcommand(1);
  Params p;
  if (const char* env = std::getenv("ARCH_ZETA_THREADS")) {
    try {
      p.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "error: ARCH_ZETA_THREADS must be a non-negative integer\n";
      return 1;
    }
  }
  app.add_flag("--json", p.json, "JSON output");

  auto* lf = app.add_subcommand("lfactor", "archimedean L-factor at s");
  add_context(lf, p, false);
  lf->add_option("--s", p.s, "point s as p/q (half-integer)");

  auto* eu = app.add_subcommand("euler", "modified Euler factor");
  add_context(eu, p);
  eu->add_option("--s", p.s, "point s as p/q (default: the --side point)");
  eu->add_option("--side", p.side, "right|left");

  auto* ze = app.add_subcommand("zeta", "zeta integral at s = (k-n)/2 or (n-k)/2");
  add_context(ze, p);
  ze->add_option("--side", p.side, "right|left");
  ze->add_option("--route", p.route, "form1|chain|form2 (right), display|funceq (left)");

  auto* di = app.add_subcommand("dims", "dimensions of lambda and the GL factors");
  add_context(di, p);
  di->add_option("--weight", p.weight, "plain GL(m) weight w_1,...,w_m");

  auto* fd = app.add_subcommand("formal-degree", "formal degree");
  add_context(fd, p, false);

  auto* cr = app.add_subcommand("cratio", "intertwining-constant ratio c_ratio(n, k)");
  cr->add_option("--n", p.n, "n")->required();
  cr->add_option("--k", p.k, "k")->required();

  auto* orc = app.add_subcommand("oracle", "Monte-Carlo matrix coefficient");
  add_context(orc, p);
  orc->add_option("--poly", p.poly, "I|QQ");
  orc->add_option("--convention", p.convention, "aligned|literal pairing for QQ");

  auto* au = app.add_subcommand("audit", "constant-factor audit over a sweep");
  au->add_option("--sweep", p.sweep, "standard or key=value list");

  auto* ve = app.add_subcommand("verify", "run verification suites");
  ve->add_option("--suite", p.suite, "identities|dims|cratio|oracle|audit|all");
  ve->add_option("--sweep", p.sweep, "standard or key=value list");

  for (CLI::App* sub : {lf, eu, ze, di, fd, cr, orc, au, ve}) {
    sub->add_flag("--json", p.json, "JSON output");
  }
  for (CLI::App* sub : {orc, au, ve}) {
    sub->add_option("--threads", p.threads, "worker threads (default ARCH_ZETA_THREADS or 1)");
  }
  for (CLI::App* sub : {orc, ve}) {
    sub->add_option("--samples", p.samples, "Monte-Carlo samples");
    sub->add_option("--batch", p.batch, "samples per batch");
    sub->add_option("--seed", p.seed, "RNG seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (p.threads == 0) p.threads = std::max(1u, std::thread::hardware_concurrency());

  try {
    if (lf->parsed()) return run_lfactor(p);
    if (eu->parsed()) return run_euler(p);
    if (ze->parsed()) return run_zeta(p);
    if (di->parsed()) return run_dims(p);
    if (fd->parsed()) return run_formal_degree(p);
    if (cr->parsed()) return run_cratio(p);
    if (orc->parsed()) return run_oracle(p);
    if (au->parsed()) return run_audit(p);
    if (ve->parsed()) return run_verify(p);
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::AuditStructuralFailure ? 3 : (e.is_validation() ? 1 : 2);
    if (p.json) {
      std::cout << json{{"schema", kSchema}, {"status", "error"}, {"code", error_code_name(e.code())}, {"message", e.what()}}
                       .dump(2)
                << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return code;
  }
  return 0;
}
