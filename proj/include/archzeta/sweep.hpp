#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "archzeta/weights.hpp"

namespace archzeta {

/// Grid of k-condition-satisfying contexts: every (a, b) with
/// min_n <= a+b <= max_n, n <= k <= n + max_dk (optionally capped at max_k),
/// r = k mod 2 with |r| <= k, tau_a - (k+r)/2 and nu*_b - (k-r)/2 in
/// [0, max_offset], successive gaps within each block in [0, max_gap].
struct SweepSpec {
  std::int64_t min_n = 1;
  std::int64_t max_n = 4;
  std::int64_t max_dk = 4;
  std::int64_t max_offset = 3;
  std::int64_t max_gap = 2;
  std::optional<std::int64_t> max_k;

  /// "standard" or a comma list of key=value with keys
  /// min_n, max_n, max_dk, max_offset, max_gap, max_k.
  static SweepSpec parse(std::string_view text);
  std::string to_string() const;
};

std::vector<ZetaContext> generate_sweep(const SweepSpec& spec);

}  // namespace archzeta
