#pragma once

#include "json.hpp"

#include "archzeta/exact.hpp"
#include "archzeta/oracle.hpp"
#include "archzeta/weights.hpp"
#include "archzeta/zeta.hpp"

namespace archzeta {

inline constexpr const char* kSchema = "arch-zeta/1";

/// {coeff:"p/q", pow2_halves, powpi_halves, ipow, float:{re,im}}; zero
/// carries "zero": true. float is null when outside double range.
nlohmann::json to_json(const ExactScalar& x);
/// Reads the exact fields back; float is ignored.
ExactScalar exact_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ZetaContext& ctx);
nlohmann::json to_json(const AuditReport& rep);
nlohmann::json to_json(const MCEstimate& est);
nlohmann::json to_json(const PiRatioReport& rep);

}  // namespace archzeta
