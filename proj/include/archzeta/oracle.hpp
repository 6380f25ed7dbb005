#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "archzeta/weights.hpp"

namespace archzeta {

/// Philox4x32-10 counter-based generator. The stream is fixed by
/// (seed, stream); draws advance the low half of the counter.
class Philox4x32 {
 public:
  Philox4x32(std::uint64_t seed, std::uint64_t stream);

  std::array<std::uint32_t, 4> next_block();
  /// Uniform on (0, 1], 53 bits.
  double uniform();
  /// Standard normal via Box-Muller.
  double normal();

  static std::array<std::uint32_t, 4> bijection(std::array<std::uint32_t, 4> ctr,
                                                std::array<std::uint32_t, 2> key);

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t draw_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int used_ = 4;
  std::optional<double> spare_;
};

using ComplexMatrix = Eigen::MatrixXcd;

/// Entries with independent real and imaginary parts of variance 1/(2 pi),
/// i.e. density exp(-pi |z|^2).
ComplexMatrix sample_matrix(Eigen::Index rows, Eigen::Index cols, Philox4x32& rng);

enum class PolyKind { I, QQ };

/// How Q~ reads its two w-blocks when paired with Q.
///   Literal: w = (conj z2; conj z1) inserted into the displayed Q~.
///   Aligned: Q~(w1; w2) := Q(w2; w1), so the pairing is |Q(z)|^2.
enum class PairingConvention { Literal, Aligned };

const char* poly_kind_name(PolyKind k);
PolyKind parse_poly_kind(std::string_view text);
const char* convention_name(PairingConvention c);
PairingConvention parse_convention(std::string_view text);

class MinorPolynomial {
 public:
  MinorPolynomial(PolyKind kind, ZetaContext ctx, PairingConvention conv = PairingConvention::Aligned);

  PolyKind kind() const { return kind_; }
  const ZetaContext& ctx() const { return ctx_; }
  /// Sum of all minor exponents.
  std::int64_t total_degree() const;
  /// z1 is a x k, z2 is b x k.
  std::complex<double> eval(const ComplexMatrix& z1, const ComplexMatrix& z2) const;

 private:
  std::complex<double> q_of(const ComplexMatrix& top, const ComplexMatrix& bottom) const;
  std::complex<double> q_tilde_literal(const ComplexMatrix& w1, const ComplexMatrix& w2) const;

  PolyKind kind_;
  ZetaContext ctx_;
  PairingConvention conv_;
  // alpha_j = exponent on the j-th leading minor (tau block), beta_j on the
  // j-th trailing minor (nu* block), j = 1..a and 1..b.
  std::vector<std::int64_t> alpha_;
  std::vector<std::int64_t> beta_;
};

struct OracleConfig {
  std::uint64_t samples = 2'000'000;
  std::uint64_t batch = 20'000;
  std::uint64_t seed = 7;
  unsigned threads = 1;

  /// Throws InvalidArgument unless batch > 0 and batch divides samples.
  void validate() const;
};

struct MCEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Integrand over (z1, z2) with z1 of shape a x k and z2 of shape b x k.
using Integrand = std::function<std::complex<double>(const ComplexMatrix&, const ComplexMatrix&)>;

/// Batch-mean estimate of E[Re f(z1, z2)]. Batch i draws from stream
/// (seed, i); partial sums merge in batch order, so the result does not
/// depend on the thread count.
MCEstimate mc_estimate_fn(std::int64_t a, std::int64_t b, std::int64_t k, const Integrand& f,
                          const OracleConfig& cfg);
MCEstimate mc_estimate(const MinorPolynomial& p, const OracleConfig& cfg);

/// Non-empty when the estimate is expected to be noisy.
std::string variance_warning(const MinorPolynomial& p);

struct PiRatioReport {
  MCEstimate mc_i;
  MCEstimate mc_qq;
  double ratio = 0.0;
  double ratio_stderr = 0.0;
  double target = 0.0;
  double z_score = 0.0;
  PairingConvention convention = PairingConvention::Aligned;
};

/// Paired estimate of MC(I) / MC(Q x Q~) against dim(GL(a),tau) dim(GL(b),nu).
/// Throws DegenerateDenominator when |MC(Q x Q~)| < 5 stderr.
PiRatioReport verify_pi_ratio(const ZetaContext& ctx, const OracleConfig& cfg,
                              PairingConvention conv = PairingConvention::Aligned);

}  // namespace archzeta
