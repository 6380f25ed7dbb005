#include "archzeta/io.hpp"

#include "archzeta/errors.hpp"

namespace archzeta {

using nlohmann::json;

json to_json(const ExactScalar& x) {
  json j;
  if (x.is_zero()) j["zero"] = true;
  j["coeff"] = x.is_zero() ? "0" : rational_to_string(x.coeff());
  j["pow2_halves"] = x.pow2_exp().halves();
  j["powpi_halves"] = x.pow_pi_exp().halves();
  j["ipow"] = x.ipow_exp();
  try {
    const std::complex<double> z = x.to_complex();
    j["float"] = {{"re", z.real()}, {"im", z.imag()}};
  } catch (const Error&) {
    j["float"] = nullptr;
  }
  return j;
}

ExactScalar exact_from_json(const json& j) {
  try {
    if (j.value("zero", false)) return ExactScalar::zero();
    const Rational q = parse_rational(j.at("coeff").get<std::string>());
    return ExactScalar::make(q, HalfInt::from_halves(j.at("pow2_halves").get<std::int64_t>()),
                             HalfInt::from_halves(j.at("powpi_halves").get<std::int64_t>()),
                             j.at("ipow").get<std::int64_t>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed exact scalar JSON: ") + e.what());
  }
}

json to_json(const ZetaContext& ctx) {
  return {{"a", ctx.a()}, {"b", ctx.b()}, {"tau", ctx.wt.tau}, {"nu", ctx.wt.nu}, {"k", ctx.k()}, {"r", ctx.r()}};
}

json to_json(const AuditReport& rep) {
  json ratios = json::array();
  for (const AuditRatio& r : rep.ratios) {
    ratios.push_back({{"name", r.name},
                      {"value", to_json(r.value)},
                      {"text", r.value.to_string()},
                      {"pow2_halves", r.value.pow2_exp().halves()},
                      {"ipow", r.value.ipow_exp()},
                      {"coeff_is_one", r.coeff_is_one},
                      {"powpi_zero", r.pow_pi_zero}});
  }
  return {{"ctx", to_json(rep.ctx)}, {"ratios", ratios}, {"structural", rep.structural()}};
}

json to_json(const MCEstimate& est) {
  return {{"mean", est.mean}, {"stderr", est.stderr_}, {"samples", est.samples}, {"seed", est.seed}};
}

json to_json(const PiRatioReport& rep) {
  return {{"mc_I", to_json(rep.mc_i)},
          {"mc_QQ", to_json(rep.mc_qq)},
          {"ratio", rep.ratio},
          {"ratio_stderr", rep.ratio_stderr},
          {"target", rep.target},
          {"z_score", rep.z_score},
          {"convention", convention_name(rep.convention)}};
}

}  // namespace archzeta
