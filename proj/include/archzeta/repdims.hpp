#pragma once

#include <cstdint>
#include <vector>

#include "archzeta/exact.hpp"
#include "archzeta/weights.hpp"

namespace archzeta {

/// Highest weight of GL(m): weakly decreasing, possibly empty.
using GLWeight = std::vector<std::int64_t>;

/// prod_{i<j} (w_i - w_j + j - i) / (j - i).
BigInt weyl_dim(const GLWeight& w);

/// Number of Gelfand-Tsetlin patterns with top row w.
/// Requires m <= 5 and entries in [-12, 12] (ErrorCode::BoundExceeded).
BigInt gt_dim_oracle(const GLWeight& w);

/// (tau_1-(k+r)/2, ..., tau_a-(k+r)/2, 0, ..., 0, nu_1+(k-r)/2, ..., nu_b+(k-r)/2), length k.
GLWeight lambda_weight(const ZetaContext& ctx);

/// Closed product for dim lambda_{k,r}(tau, nu), with the Gamma quotients
/// evaluated as factorial ratios.
BigInt dim_lambda_closed(const ZetaContext& ctx);

/// dim(GL(a), tau) * dim(GL(b), nu).
BigInt dim_gl_pair(const ZetaContext& ctx);

/// [prod(tau_i-tau_j-i+j) prod(nu*_i-nu*_j-i+j) prod(tau_i+nu*_j+1-i-j)]
///   / [2^(ab-n/2) pi^ab prod_{j<=a} Gamma(j) prod_{j<=b} Gamma(j)].
ExactScalar formal_degree(const DiscreteSeriesWeight& wt, const Signature& sig);

/// Closed form of dim lambda / formal degree.
ExactScalar dfd_ratio(const ZetaContext& ctx);

/// Gamma(x) for a positive integer x as an exact integer; NonPositiveArgument otherwise.
BigInt gamma_int(std::int64_t x);

}  // namespace archzeta
