#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "archzeta/halfint.hpp"

namespace archzeta {

/// Signature (a, b) of U(a, b); n = a + b >= 1.
struct Signature {
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t n() const { return a + b; }
  /// Throws InvalidArgument unless a, b >= 0 and n >= 1.
  void validate() const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Holomorphic discrete series weight (tau; nu), both weakly decreasing.
struct DiscreteSeriesWeight {
  std::vector<std::int64_t> tau;
  std::vector<std::int64_t> nu;

  /// Throws InvalidArgument on a length mismatch or a non-dominant block.
  void validate(const Signature& sig) const;
  friend bool operator==(const DiscreteSeriesWeight&, const DiscreteSeriesWeight&) = default;
};

struct TwistParams {
  std::int64_t k = 0;
  std::int64_t r = 0;
  friend bool operator==(const TwistParams&, const TwistParams&) = default;
};

/// Parameters of one zeta-integral evaluation. Construct through
/// make_context() to get the full k-condition enforced.
struct ZetaContext {
  Signature sig;
  DiscreteSeriesWeight wt;
  TwistParams tw;

  std::int64_t a() const { return sig.a; }
  std::int64_t b() const { return sig.b; }
  std::int64_t n() const { return sig.n(); }
  std::int64_t k() const { return tw.k; }
  std::int64_t r() const { return tw.r; }
  /// (k + r) / 2 and (k - r) / 2; exact when k = r mod 2.
  std::int64_t k_plus() const { return (tw.k + tw.r) / 2; }
  std::int64_t k_minus() const { return (tw.k - tw.r) / 2; }

  std::string key() const;
  friend bool operator==(const ZetaContext&, const ZetaContext&) = default;
};

struct KConditionCheck {
  bool ok = false;
  /// Names the first failing clause; empty when ok.
  std::string diagnostic;
};

KConditionCheck check_k_condition(const ZetaContext& ctx);

/// Validates signature, weight and the k-condition; throws InvalidArgument
/// or ConditionViolated with a user-facing message.
ZetaContext make_context(Signature sig, DiscreteSeriesWeight wt, TwistParams tw);

struct DualWeight {
  std::vector<std::int64_t> tau_star;
  std::vector<std::int64_t> nu_star;
};

/// tau*_j = -tau_{a+1-j}, nu*_j = -nu_{b+1-j}.
DualWeight dual_weight(const DiscreteSeriesWeight& wt, const Signature& sig);

/// nu*_j = -nu_{b+1-j}
std::vector<std::int64_t> nu_star(const DiscreteSeriesWeight& wt);

/// (tau;nu) + (rho_c - rho_nc): tau_j + (a-b+1-2j)/2, nu_j + (a+b+1-2j)/2.
std::vector<HalfInt> hc_parameter(const DiscreteSeriesWeight& wt, const Signature& sig);

/// The 2n shifted parameters c_j entering the L-factor: hc_parameter - r/2.
std::vector<HalfInt> shifted_parameters(const DiscreteSeriesWeight& wt, const Signature& sig,
                                        std::int64_t r);

/// Critical points of L(s, D* x chi^r): the lattice s0 in Z - (r+n-1)/2
/// intersected with -|c_j| + 1 <= s0 <= |c_j| for every j.
struct CriticalSet {
  /// Representative of the lattice coset, 0 or 1/2.
  HalfInt offset;
  /// Smallest and largest lattice points in range; empty when lower > upper.
  HalfInt lower;
  HalfInt upper;

  bool empty() const { return lower > upper; }
  bool contains(HalfInt s0) const;
  std::vector<HalfInt> points() const;
};

CriticalSet critical_points(const DiscreteSeriesWeight& wt, const Signature& sig, std::int64_t r);

}  // namespace archzeta
