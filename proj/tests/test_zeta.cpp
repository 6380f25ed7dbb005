#include "doctest.h"
#include "float_reference.hpp"

#include "archzeta/errors.hpp"
#include "archzeta/ratfun.hpp"
#include "archzeta/sweep.hpp"
#include "archzeta/zeta.hpp"

using namespace archzeta;

namespace {

const ZetaContext& anchor() {
  static const ZetaContext c = make_context({1, 1}, {{1}, {-1}}, {2, 0});
  return c;
}

ExactScalar mono(std::int64_t p, std::int64_t pow2_halves, std::int64_t powpi_halves, std::int64_t ip = 0) {
  return ExactScalar::make(Rational(p), half(pow2_halves), half(powpi_halves), ip);
}

std::vector<ZetaContext> small_sweep() {
  return generate_sweep(SweepSpec::parse("max_n=3,max_dk=3,max_offset=2,max_gap=1"));
}

}  // namespace

TEST_CASE("route and side names") {
  for (Route r : {Route::Form1, Route::Chain, Route::Form2, Route::LeftDisplay, Route::LeftFuncEq})
    CHECK(parse_route(route_name(r)) == r);
  CHECK(parse_side("left") == Side::Left);
  CHECK(parse_side(side_name(Side::Right)) == Side::Right);
  CHECK_THROWS_AS(parse_route("form3"), Error);
}

TEST_CASE("matrix coefficient closed form") {
  CHECK(mc_closed(anchor()) == ExactScalar::one());
  CHECK(mc_closed(make_context({1, 1}, {{2}, {-2}}, {2, 0})) == mono(1, 0, -4));
  CHECK(mc_closed(make_context({2, 1}, {{2, 2}, {-1}}, {3, 1})) == ExactScalar::one());
  for (const ZetaContext& c : small_sweep())
    CHECK(fref::rel_err(mc_closed(c).to_complex(), fref::mc(c)) < 1e-10);
}

TEST_CASE("twist exponent") {
  CHECK(twist_exponent(anchor()) == 0);
  CHECK(twist_exponent(make_context({1, 1}, {{3}, {-3}}, {4, 0})) == -2);
  for (const ZetaContext& c : small_sweep()) CHECK(static_cast<double>(twist_exponent(c)) == fref::twist(c));
}

TEST_CASE("right side form1 examples") {
  const ZetaValue v = zeta_right_form1(anchor());
  CHECK(v.value == ExactScalar::pi());
  CHECK(v.value.to_string() == "1 * pi^(2/2)");
  CHECK(zeta_right_form1(make_context({2, 1}, {{2, 2}, {-1}}, {3, 1})).value == mono(1, -1, 4));
}

TEST_CASE("chain equals form1 on the sweep") {
  for (const ZetaContext& c : generate_sweep(SweepSpec{})) {
    CHECK(zeta_right_chain(c).value == zeta_right_form1(c).value);
  }
}

TEST_CASE("form1 agrees with the float reference") {
  for (const ZetaContext& c : small_sweep()) {
    CHECK(fref::rel_err(zeta_right_form1(c).value.to_complex(), fref::form1(c)) < 1e-9);
    CHECK(fref::rel_err(zeta_right_chain(c).value.to_complex(), fref::chain(c)) < 1e-9);
  }
}

TEST_CASE("form1 carries i^(twist exponent) up to sign") {
  for (const ZetaContext& c : small_sweep()) {
    const std::int64_t want = ((twist_exponent(c) % 4) + 4) % 4;
    CHECK(zeta_right_form1(c).value.ipow_exp() % 2 == want % 2);
  }
}

TEST_CASE("norm factors") {
  CHECK(norm_factor(Side::Right, 2, 2) == mono(1, -4, -6));
  CHECK(norm_factor(Side::Left, 2, 2) == mono(4, 0, -6));
  CHECK(norm_factor(Side::Left, 1, 1) == mono(1, 0, -2, 1));
  CHECK(w_coefficient(Side::Right, 2, 2) == mono(4, 0, 6));
  CHECK(w_coefficient(Side::Left, 2, 2) == mono(1, -4, 6));
  for (std::int64_t n = 1; n <= 5; ++n)
    for (std::int64_t k = n; k <= n + 6; ++k)
      for (Side s : {Side::Right, Side::Left})
        CHECK(w_coefficient(s, n, k) * norm_factor(s, n, k) == ExactScalar::one());
}

TEST_CASE("anchor values on every route") {
  CHECK(zeta_right_form2(anchor()).value == mono(4, 0, 2));
  CHECK(zeta_left_display(anchor()).value == mono(1, -4, 2));
  CHECK(zeta_left_funceq(anchor()).value == mono(1, -8, 2));
  CHECK(zeta_value(anchor(), Route::Chain).route == Route::Chain);
  CHECK(zeta_value(anchor(), Route::LeftFuncEq).value == zeta_left_funceq(anchor()).value);
}

TEST_CASE("audit of the anchor context") {
  const AuditReport rep = audit_context(anchor());
  REQUIRE(rep.ratios.size() == 4);
  CHECK(rep.structural());
  for (const AuditRatio& r : rep.ratios) {
    if (r.name == "form2/form1") CHECK(r.value == ExactScalar::pow2(HalfInt::from_int(2)));
    if (r.name == "funceq/display") CHECK(r.value == ExactScalar::pow2(HalfInt::from_int(-2)));
    if (r.name == "display/form1") CHECK(r.value == ExactScalar::pow2(HalfInt::from_int(-2)));
    if (r.name == "funceq/form1") CHECK(r.value == ExactScalar::pow2(HalfInt::from_int(-4)));
  }
  // k > n: only the two same-side ratios
  CHECK(audit_context(make_context({1, 1}, {{3}, {-3}}, {4, 0})).ratios.size() == 2);
}

TEST_CASE("audit is deterministic across thread counts") {
  const auto sweep = small_sweep();
  const auto one = audit(sweep, 1);
  const auto four = audit(sweep, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].ctx.key() == four[i].ctx.key());
    REQUIRE(one[i].ratios.size() == four[i].ratios.size());
    for (std::size_t j = 0; j < one[i].ratios.size(); ++j) CHECK(one[i].ratios[j].value == four[i].ratios[j].value);
  }
  for (const auto& [name, independent] : audit_weight_independence(one)) {
    INFO(name);
    CHECK(independent);
  }
}

TEST_CASE("c_ratio cache") {
  CHECK(c_ratio_cached(2, 2) == ExactScalar::from_int(-1));
  CHECK(c_ratio_cached(2, 2) == c_ratio(2, 2));
  CHECK(c_ratio_cached(4, 7) == c_ratio(4, 7));
}
