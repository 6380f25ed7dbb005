#include "archzeta/oracle.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <thread>

#include "archzeta/errors.hpp"
#include "archzeta/repdims.hpp"

namespace archzeta {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

std::complex<double> cpow(std::complex<double> x, std::int64_t e) {
  std::complex<double> acc(1.0, 0.0);
  for (std::int64_t i = 0; i < e; ++i) acc *= x;
  return acc;
}

std::complex<double> det(const ComplexMatrix& m) {
  if (m.rows() == 0) return {1.0, 0.0};
  return m.determinant();
}

// Per-batch means of several integrands on a shared sample stream.
std::vector<std::vector<double>> batch_means(std::int64_t a, std::int64_t b, std::int64_t k,
                                             const std::vector<Integrand>& fs, const OracleConfig& cfg) {
  cfg.validate();
  const std::uint64_t nb = cfg.samples / cfg.batch;
  std::vector<std::vector<double>> out(fs.size(), std::vector<double>(nb, 0.0));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    std::vector<double> sums(fs.size());
    for (std::uint64_t bi = next++; bi < nb; bi = next++) {
      Philox4x32 rng(cfg.seed, bi);
      std::fill(sums.begin(), sums.end(), 0.0);
      for (std::uint64_t s = 0; s < cfg.batch; ++s) {
        const ComplexMatrix z1 = sample_matrix(a, k, rng);
        const ComplexMatrix z2 = sample_matrix(b, k, rng);
        for (std::size_t f = 0; f < fs.size(); ++f) sums[f] += fs[f](z1, z2).real();
      }
      for (std::size_t f = 0; f < fs.size(); ++f) out[f][bi] = sums[f] / static_cast<double>(cfg.batch);
    }
  };
  const unsigned t = std::max(1u, cfg.threads);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < t; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Standard error of the mean of batch means.
double stderr_of(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double var = ss / static_cast<double>(v.size() - 1);
  return std::sqrt(var / static_cast<double>(v.size()));
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream) {}

std::array<std::uint32_t, 4> Philox4x32::bijection(std::array<std::uint32_t, 4> ctr,
                                                   std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kM0, ctr[0], hi0, lo0);
    mulhilo(kM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

std::array<std::uint32_t, 4> Philox4x32::next_block() {
  const std::array<std::uint32_t, 4> ctr{static_cast<std::uint32_t>(draw_), static_cast<std::uint32_t>(draw_ >> 32),
                                         static_cast<std::uint32_t>(stream_),
                                         static_cast<std::uint32_t>(stream_ >> 32)};
  ++draw_;
  return bijection(ctr, key_);
}

double Philox4x32::uniform() {
  if (used_ >= 3) {
    buf_ = next_block();
    used_ = 0;
  }
  const std::uint64_t hi = buf_[used_] >> 5;  // 27 bits
  const std::uint64_t lo = buf_[used_ + 1] >> 6;  // 26 bits
  used_ += 2;
  return (static_cast<double>((hi << 26) | lo) + 1.0) * 0x1.0p-53;
}

double Philox4x32::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  spare_ = rad * std::sin(th);
  return rad * std::cos(th);
}

ComplexMatrix sample_matrix(Eigen::Index rows, Eigen::Index cols, Philox4x32& rng) {
  static const double sd = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = sd * rng.normal();
      const double im = sd * rng.normal();
      m(i, j) = {re, im};
    }
  }
  return m;
}

const char* poly_kind_name(PolyKind k) { return k == PolyKind::I ? "I" : "QQ"; }

PolyKind parse_poly_kind(std::string_view text) {
  if (text == "I") return PolyKind::I;
  if (text == "QQ") return PolyKind::QQ;
  throw Error(ErrorCode::InvalidArgument, "unknown polynomial '" + std::string(text) + "' (expected I or QQ)");
}

const char* convention_name(PairingConvention c) { return c == PairingConvention::Literal ? "literal" : "aligned"; }

PairingConvention parse_convention(std::string_view text) {
  if (text == "literal") return PairingConvention::Literal;
  if (text == "aligned") return PairingConvention::Aligned;
  throw Error(ErrorCode::InvalidArgument, "unknown convention '" + std::string(text) + "'");
}

MinorPolynomial::MinorPolynomial(PolyKind kind, ZetaContext ctx, PairingConvention conv)
    : kind_(kind), ctx_(std::move(ctx)), conv_(conv) {
  const KConditionCheck check = check_k_condition(ctx_);
  if (!check.ok) throw Error(ErrorCode::ConditionViolated, check.diagnostic);
  const std::int64_t a = ctx_.a();
  const std::int64_t b = ctx_.b();
  const std::vector<std::int64_t> ns = nu_star(ctx_.wt);
  alpha_.resize(static_cast<std::size_t>(a));
  beta_.resize(static_cast<std::size_t>(b));
  for (std::int64_t j = 0; j < a; ++j) {
    alpha_[j] = j + 1 < a ? ctx_.wt.tau[j] - ctx_.wt.tau[j + 1] : ctx_.wt.tau[j] - ctx_.k_plus();
  }
  for (std::int64_t j = 0; j < b; ++j) {
    beta_[j] = j + 1 < b ? ns[j] - ns[j + 1] : ns[j] - ctx_.k_minus();
  }
}

std::int64_t MinorPolynomial::total_degree() const {
  return std::accumulate(alpha_.begin(), alpha_.end(), std::int64_t{0}) +
         std::accumulate(beta_.begin(), beta_.end(), std::int64_t{0});
}

// Q on the stacked matrix (top; bottom): leading minors of top, trailing minors of bottom.
std::complex<double> MinorPolynomial::q_of(const ComplexMatrix& top, const ComplexMatrix& bottom) const {
  const Eigen::Index k = top.cols();
  std::complex<double> acc(1.0, 0.0);
  for (std::size_t j = 0; j < alpha_.size(); ++j) {
    if (alpha_[j] == 0) continue;
    const Eigen::Index m = static_cast<Eigen::Index>(j + 1);
    acc *= cpow(det(top.topLeftCorner(m, m)), alpha_[j]);
  }
  for (std::size_t j = 0; j < beta_.size(); ++j) {
    if (beta_[j] == 0) continue;
    const Eigen::Index m = static_cast<Eigen::Index>(j + 1);
    acc *= cpow(det(bottom.block(bottom.rows() - m, k - m, m, m)), beta_[j]);
  }
  return acc;
}

// Displayed Q~ on w = (w1; w2), w1 of b rows, w2 of a rows.
std::complex<double> MinorPolynomial::q_tilde_literal(const ComplexMatrix& w1, const ComplexMatrix& w2) const {
  const Eigen::Index k = w1.cols();
  std::complex<double> acc(1.0, 0.0);
  for (std::size_t j = 0; j < beta_.size(); ++j) {
    if (beta_[j] == 0) continue;
    const Eigen::Index m = static_cast<Eigen::Index>(j + 1);
    acc *= cpow(det(w1.topLeftCorner(m, m)), beta_[j]);
  }
  for (std::size_t j = 0; j < alpha_.size(); ++j) {
    if (alpha_[j] == 0) continue;
    const Eigen::Index m = static_cast<Eigen::Index>(j + 1);
    acc *= cpow(det(w2.block(w2.rows() - m, k - m, m, m)), alpha_[j]);
  }
  return acc;
}

std::complex<double> MinorPolynomial::eval(const ComplexMatrix& z1, const ComplexMatrix& z2) const {
  if (kind_ == PolyKind::I) {
    std::complex<double> acc(1.0, 0.0);
    if (!alpha_.empty()) {
      const ComplexMatrix g = z1.transpose() * z1.conjugate();
      for (std::size_t j = 0; j < alpha_.size(); ++j) {
        if (alpha_[j] == 0) continue;
        const Eigen::Index m = static_cast<Eigen::Index>(j + 1);
        acc *= cpow(det(g.topLeftCorner(m, m)), alpha_[j]);
      }
    }
    if (!beta_.empty()) {
      const ComplexMatrix g = z2.transpose() * z2.conjugate();
      for (std::size_t j = 0; j < beta_.size(); ++j) {
        if (beta_[j] == 0) continue;
        const Eigen::Index m = static_cast<Eigen::Index>(j + 1);
        acc *= cpow(det(g.bottomRightCorner(m, m)), beta_[j]);
      }
    }
    return acc;
  }
  const std::complex<double> q = q_of(z1, z2);
  if (conv_ == PairingConvention::Aligned) return q * std::conj(q);
  return q * q_tilde_literal(z2.conjugate(), z1.conjugate());
}

void OracleConfig::validate() const {
  if (batch == 0) throw Error(ErrorCode::InvalidArgument, "batch size must be positive");
  if (samples == 0 || samples % batch != 0) {
    throw Error(ErrorCode::InvalidArgument, "samples must be a positive multiple of the batch size");
  }
}

MCEstimate mc_estimate_fn(std::int64_t a, std::int64_t b, std::int64_t k, const Integrand& f,
                          const OracleConfig& cfg) {
  const auto means = batch_means(a, b, k, {f}, cfg);
  MCEstimate est;
  est.mean = mean_of(means[0]);
  est.stderr_ = stderr_of(means[0], est.mean);
  est.samples = cfg.samples;
  est.seed = cfg.seed;
  return est;
}

MCEstimate mc_estimate(const MinorPolynomial& p, const OracleConfig& cfg) {
  const ZetaContext& ctx = p.ctx();
  return mc_estimate_fn(ctx.a(), ctx.b(), ctx.k(),
                        [&p](const ComplexMatrix& z1, const ComplexMatrix& z2) { return p.eval(z1, z2); }, cfg);
}

std::string variance_warning(const MinorPolynomial& p) {
  if (p.total_degree() > 4 || p.ctx().k() > 5) {
    return "total minor exponent " + std::to_string(p.total_degree()) + " with k = " + std::to_string(p.ctx().k()) +
           " exceeds the desk-scale range (exponent <= 4, k <= 5); expect a large standard error";
  }
  return {};
}

PiRatioReport verify_pi_ratio(const ZetaContext& ctx, const OracleConfig& cfg, PairingConvention conv) {
  const MinorPolynomial pi(PolyKind::I, ctx);
  const MinorPolynomial pq(PolyKind::QQ, ctx, conv);
  const auto means = batch_means(
      ctx.a(), ctx.b(), ctx.k(),
      {[&pi](const ComplexMatrix& z1, const ComplexMatrix& z2) { return pi.eval(z1, z2); },
       [&pq](const ComplexMatrix& z1, const ComplexMatrix& z2) { return pq.eval(z1, z2); }},
      cfg);

  PiRatioReport rep;
  rep.convention = conv;
  rep.mc_i = {mean_of(means[0]), 0.0, cfg.samples, cfg.seed};
  rep.mc_i.stderr_ = stderr_of(means[0], rep.mc_i.mean);
  rep.mc_qq = {mean_of(means[1]), 0.0, cfg.samples, cfg.seed};
  rep.mc_qq.stderr_ = stderr_of(means[1], rep.mc_qq.mean);
  rep.target = static_cast<double>(dim_gl_pair(ctx));

  if (rep.mc_qq.mean == 0.0 || std::abs(rep.mc_qq.mean) < 5.0 * rep.mc_qq.stderr_) {
    throw Error(ErrorCode::DegenerateDenominator,
                "MC(Q x Q~) = " + std::to_string(rep.mc_qq.mean) + " is within 5 standard errors (" +
                    std::to_string(rep.mc_qq.stderr_) + ") of zero under the " + convention_name(conv) +
                    " pairing");
  }
  rep.ratio = rep.mc_i.mean / rep.mc_qq.mean;
  // delta method on the paired batch means
  std::vector<double> resid(means[0].size());
  for (std::size_t i = 0; i < resid.size(); ++i) resid[i] = means[0][i] - rep.ratio * means[1][i];
  rep.ratio_stderr = stderr_of(resid, mean_of(resid)) / std::abs(rep.mc_qq.mean);
  const double diff = rep.ratio - rep.target;
  rep.z_score = rep.ratio_stderr > 0.0 ? diff / rep.ratio_stderr : (diff == 0.0 ? 0.0 : INFINITY);
  return rep;
}

}  // namespace archzeta
