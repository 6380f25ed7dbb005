#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "archzeta/exact.hpp"
#include "archzeta/weights.hpp"

namespace archzeta {

enum class Route { Form1, Chain, Form2, LeftDisplay, LeftFuncEq };
enum class Side { Right, Left };

const char* route_name(Route r);
Route parse_route(std::string_view text);
const char* side_name(Side s);
Side parse_side(std::string_view text);

struct ZetaValue {
  ExactScalar value;
  Route route = Route::Form1;
};

/// -sum tau - sum nu* + a(k+r)/2 + b(k-r)/2
std::int64_t twist_exponent(const ZetaContext& ctx);

/// Closed-form matrix coefficient MC(1, I).
ExactScalar mc_closed(const ZetaContext& ctx);

ZetaValue zeta_right_form1(const ZetaContext& ctx);
ZetaValue zeta_right_chain(const ZetaContext& ctx);
ZetaValue zeta_right_form2(const ZetaContext& ctx);
ZetaValue zeta_left_display(const ZetaContext& ctx);
ZetaValue zeta_left_funceq(const ZetaContext& ctx);

/// Dispatch by route; Form1/Chain/Form2 are right-side, the others left-side.
ZetaValue zeta_value(const ZetaContext& ctx, Route route);

ExactScalar norm_factor(Side side, std::int64_t n, std::int64_t k);
ExactScalar w_coefficient(Side side, std::int64_t n, std::int64_t k);

/// c_ratio(n, k), memoized and safe to call from several threads.
ExactScalar c_ratio_cached(std::int64_t n, std::int64_t k);

struct AuditRatio {
  std::string name;
  ExactScalar value;
  bool coeff_is_one = false;
  bool pow_pi_zero = false;
  bool structural() const { return coeff_is_one && pow_pi_zero; }
};

struct AuditReport {
  ZetaContext ctx;
  std::vector<AuditRatio> ratios;
  bool structural() const;
};

/// Ratios form2/form1, leftFuncEq/leftDisplay and, when k = n,
/// leftDisplay/form1 and leftFuncEq/form1.
AuditReport audit_context(const ZetaContext& ctx);

/// Audits every context on `threads` workers; reports come back sorted by
/// context key. Throws AuditStructuralFailure when any ratio carries pi or
/// a non-unit rational.
std::vector<AuditReport> audit(const std::vector<ZetaContext>& sweep, unsigned threads = 1);

/// Per ratio name: whether the ratio depends only on (a, b, k, r).
std::map<std::string, bool> audit_weight_independence(const std::vector<AuditReport>& reports);

}  // namespace archzeta
