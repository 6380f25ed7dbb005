#pragma once

#include <string>
#include <vector>

#include "archzeta/oracle.hpp"
#include "archzeta/sweep.hpp"

namespace archzeta {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  /// Informational lines (audit findings, convention notes).
  std::vector<std::string> notes;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

/// form1 == chain and the Euler expansion, exactly, over the sweep.
SuiteResult verify_identities(const SweepSpec& spec);
/// Weyl == Gelfand-Tsetlin on every GL(m) weight with m <= 4 and entries in
/// [-6, 6]; dim lambda closed == Weyl(lambda) and the dim/degree ratio on
/// the sweep restricted to k <= 6.
SuiteResult verify_dims(const SweepSpec& spec);
/// c_ratio(n, k) == (-1)^((k+n+1) floor(n/2)) for 1 <= n <= 5, n <= k <= n+6.
SuiteResult verify_cratio();
/// Monte-Carlo agreement with the closed matrix coefficient on the oracle
/// context list, plus the paired I / (Q x Q~) ratio.
SuiteResult verify_oracle(const OracleConfig& cfg);
/// Structural audit over the sweep.
SuiteResult verify_audit(const SweepSpec& spec, unsigned threads);

/// Contexts used by the oracle suite.
std::vector<ZetaContext> oracle_contexts();
/// Context of the paired ratio check: (2,1), tau=(3,2), nu=(-3), k=3, r=1.
ZetaContext pi_ratio_context();

}  // namespace archzeta
