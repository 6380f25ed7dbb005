#include "doctest.h"
#include "float_reference.hpp"

#include "archzeta/errors.hpp"
#include "archzeta/lfactors.hpp"
#include "archzeta/sweep.hpp"

using namespace archzeta;

namespace {

const ZetaContext& anchor() {
  static const ZetaContext c = make_context({1, 1}, {{1}, {-1}}, {2, 0});
  return c;
}

const ZetaContext& c21() {
  static const ZetaContext c = make_context({2, 1}, {{2, 2}, {-1}}, {3, 1});
  return c;
}

}  // namespace

TEST_CASE("l_factor examples") {
  CHECK(l_factor(half(1), {{1}, {-1}}, {1, 1}, 0) == ExactScalar::pow_pi(HalfInt::from_int(-2)));
  CHECK(l_factor(HalfInt::from_int(1), {{0}, {}}, {1, 0}, 1) == gamma_complex(half(3)));
  // one-block signature: the empty block contributes nothing
  CHECK(l_factor(HalfInt::from_int(1), {{}, {0}}, {0, 1}, 1) == gamma_complex(half(3)));
  CHECK_THROWS_AS(l_factor(half(-5), {{0}, {}}, {1, 0}, 0), Error);
}

TEST_CASE("euler_factor examples") {
  const ExactScalar e = euler_factor(half(1), anchor());
  CHECK(e == ExactScalar::make(Rational(1), HalfInt(), HalfInt::from_int(-2), 2));
  CHECK(euler_factor(left_point(anchor()), anchor()) == e);
  CHECK(euler_factor(right_point(c21()), c21()) == euler_right_expanded(c21()));
  try {
    (void)euler_factor(HalfInt::from_int(1), anchor());
    FAIL("expected NotInRing");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotInRing);
  }
}

TEST_CASE("euler_right_expanded examples") {
  CHECK(euler_right_expanded(anchor()) == ExactScalar::make(Rational(1), HalfInt(), HalfInt::from_int(-2), 2));
  CHECK(euler_right_expanded(c21()) == euler_factor(half(1), c21()));
}

TEST_CASE("euler expansion matches the product form on a sweep") {
  for (const ZetaContext& c : generate_sweep(SweepSpec::parse("max_n=3,max_dk=3,max_offset=2,max_gap=1"))) {
    CHECK(euler_right_expanded(c) == euler_factor(right_point(c), c));
  }
}

TEST_CASE("E differs from L only by a power of i") {
  for (const ZetaContext& c : generate_sweep(SweepSpec::parse("max_n=3,max_dk=3,max_offset=2,max_gap=1"))) {
    for (HalfInt s : {right_point(c), left_point(c)}) {
      const ExactScalar e = euler_factor(s, c);
      const ExactScalar l = l_factor(s, c.wt, c.sig, c.r());
      CHECK(e.coeff() == l.coeff());
      CHECK(e.pow2_exp() == l.pow2_exp());
      CHECK(e.pow_pi_exp() == l.pow_pi_exp());
      CHECK((e / l).is_unit_two_power());
    }
  }
}

TEST_CASE("gamma factor examples") {
  CHECK(gamma_factor_from_euler(anchor()) == ExactScalar::from_int(-1));
  const ExactScalar g = gamma_factor_from_euler(c21());
  // k = n: coincident points, gamma is a pure i-power
  CHECK(g.coeff() == 1);
  CHECK(g.pow2_exp() == HalfInt());
  CHECK(g.pow_pi_exp() == HalfInt());
}

TEST_CASE("gamma factor modulus is |E(left)| / |E(right)|") {
  for (const ZetaContext& c : generate_sweep(SweepSpec::parse("max_n=3,max_dk=3,max_offset=2,max_gap=1"))) {
    const ExactScalar g = gamma_factor_from_euler(c);
    const double want = std::abs(fref::euler(left_point(c).to_double(), c)) /
                        std::abs(fref::euler(right_point(c).to_double(), c));
    CHECK(std::abs(std::abs(g.to_complex()) - want) <= 1e-10 * want);
    if (c.k() == c.n()) CHECK(g.is_unit_two_power());
  }
}

TEST_CASE("float cross-check of the Euler factor") {
  for (const ZetaContext& c : generate_sweep(SweepSpec::parse("max_n=3,max_dk=3,max_offset=2,max_gap=1"))) {
    CHECK(fref::rel_err(euler_factor(right_point(c), c).to_complex(), fref::euler(right_point(c).to_double(), c)) < 1e-9);
    CHECK(fref::rel_err(euler_right_expanded(c).to_complex(), fref::euler_expanded(c)) < 1e-9);
  }
}
