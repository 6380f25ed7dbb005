#pragma once

#include <cstdint>

#include "archzeta/exact.hpp"
#include "archzeta/weights.hpp"

namespace archzeta {

/// prod_j Gamma_C(s + |c_j|) over the 2n shifted parameters of (tau; nu).
ExactScalar l_factor(HalfInt s, const DiscreteSeriesWeight& wt, const Signature& sig, std::int64_t r);

/// Modified Euler factor prod_j e^{-pi i (s+|c_j|)/2} Gamma_C(s + |c_j|).
/// Every s + |c_j| must be an integer (ErrorCode::NotInRing otherwise).
ExactScalar euler_factor(HalfInt s, const ZetaContext& ctx);

/// Closed Gamma-product form of euler_factor at s = (k-n+1)/2:
///   2^n (2 pi i)^(-S) prod_j Gamma(tau_j+1-j+(k-r)/2-b) prod_j Gamma(nu*_j+1-j+(k+r)/2-a)
/// with S = sum tau + sum nu* + a(k-r)/2 + b(k+r)/2 - (a(a-1)+b(b-1))/2 - 2ab.
ExactScalar euler_right_expanded(const ZetaContext& ctx);

/// The right-hand point (k-n+1)/2 and left-hand point (n-k+1)/2.
HalfInt right_point(const ZetaContext& ctx);
HalfInt left_point(const ZetaContext& ctx);

/// gamma((k-n+1)/2) obtained by solving
///   E(left) = (-1)^(sum tau + sum nu + a(k+r)/2 + b(k-r)/2) i^(-a^2-b^2) gamma E(right).
ExactScalar gamma_factor_from_euler(const ZetaContext& ctx);

}  // namespace archzeta
