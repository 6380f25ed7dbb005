#include "archzeta/sweep.hpp"

#include <charconv>
#include <functional>
#include <sstream>

#include "archzeta/errors.hpp"

namespace archzeta {

namespace {

// All weakly decreasing sequences of length len whose last entry is
// base + offset (offset in [0, max_offset]) and whose gaps lie in [0, max_gap].
std::vector<std::vector<std::int64_t>> block_weights(std::int64_t len, std::int64_t base,
                                                     std::int64_t max_offset, std::int64_t max_gap) {
  std::vector<std::vector<std::int64_t>> out;
  if (len == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::int64_t> cur(static_cast<std::size_t>(len));
  std::function<void(std::int64_t)> fill = [&](std::int64_t idx) {
    if (idx < 0) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t g = 0; g <= max_gap; ++g) {
      cur[static_cast<std::size_t>(idx)] = cur[static_cast<std::size_t>(idx) + 1] + g;
      fill(idx - 1);
    }
  };
  for (std::int64_t off = 0; off <= max_offset; ++off) {
    cur.back() = base + off;
    fill(len - 2);
  }
  return out;
}

}  // namespace

SweepSpec SweepSpec::parse(std::string_view text) {
  SweepSpec spec;
  if (text.empty() || text == "standard") return spec;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "sweep item without '=': " + std::string(item));
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || ptr != val.data() + val.size() || v < 0) {
      throw Error(ErrorCode::InvalidArgument, "bad sweep value: " + std::string(item));
    }
    if (key == "min_n") spec.min_n = v;
    else if (key == "max_n") spec.max_n = v;
    else if (key == "max_dk") spec.max_dk = v;
    else if (key == "max_offset") spec.max_offset = v;
    else if (key == "max_gap") spec.max_gap = v;
    else if (key == "max_k") spec.max_k = v;
    else throw Error(ErrorCode::InvalidArgument, "unknown sweep key: " + std::string(key));
    pos = comma + 1;
  }
  if (spec.min_n < 1 || spec.min_n > spec.max_n) {
    throw Error(ErrorCode::InvalidArgument, "sweep needs 1 <= min_n <= max_n");
  }
  return spec;
}

std::string SweepSpec::to_string() const {
  std::ostringstream out;
  out << "min_n=" << min_n << ",max_n=" << max_n << ",max_dk=" << max_dk
      << ",max_offset=" << max_offset << ",max_gap=" << max_gap;
  if (max_k) out << ",max_k=" << *max_k;
  return out.str();
}

std::vector<ZetaContext> generate_sweep(const SweepSpec& spec) {
  std::vector<ZetaContext> out;
  for (std::int64_t n = spec.min_n; n <= spec.max_n; ++n) {
    for (std::int64_t a = n; a >= 0; --a) {
      const std::int64_t b = n - a;
      for (std::int64_t k = n; k <= n + spec.max_dk; ++k) {
        if (spec.max_k && k > *spec.max_k) break;
        for (std::int64_t r = -k; r <= k; r += 2) {
          const auto taus = block_weights(a, (k + r) / 2, spec.max_offset, spec.max_gap);
          const auto nu_stars = block_weights(b, (k - r) / 2, spec.max_offset, spec.max_gap);
          for (const auto& tau : taus) {
            for (const auto& ns : nu_stars) {
              DiscreteSeriesWeight wt;
              wt.tau = tau;
              wt.nu.assign(ns.rbegin(), ns.rend());
              for (auto& x : wt.nu) x = -x;
              out.push_back(make_context({a, b}, std::move(wt), {k, r}));
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace archzeta
