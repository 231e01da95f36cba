// AWGN point-to-point and two-source superposition channels with
// reproducible noise, plus the linear-chain signal-to-interference ratio.
#pragma once

#include <cstdint>
#include <random>

namespace pnc {

/// One-sided noise power spectral density N0 (noise samples have
/// variance N0/2) and the seed all randomness derives from.
struct ChannelParams {
    double n0 = 1.0;
    std::uint64_t seed = 0;
};

/// Deterministic standard-normal sample source. Streams derived from the
/// same (seed, stream_index) are bit-identical; distinct stream indices
/// give statistically independent streams, so concurrent workers each
/// take their own index.
class NoiseStream {
  public:
    NoiseStream(std::uint64_t seed, std::uint64_t stream_index);

    /// Next N(0,1) sample (polar Box-Muller; one spare cached).
    double next_standard_normal();

    /// Next raw 64-bit uniform word (for data bits).
    std::uint64_t next_word() { return rng_(); }

  private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Stream for (params.seed, stream_index); validates n0 > 0.
NoiseStream make_noise(const ChannelParams& params, std::uint64_t stream_index = 0);

/// r = a + n, n ~ N(0, N0/2).
double p2p_awgn(double a, const ChannelParams& params, NoiseStream& noise);

/// r = a1 + a3 + n, n ~ N(0, N0/2).
double superpose_awgn(double a1, double a3, const ChannelParams& params, NoiseStream& noise);

/// SIR in dB of a chain receiver whose nearest interferers are three hops
/// away on both sides: 1 / (2 * sum_{l>=1} (2l+1)^-alpha), summed until
/// the next term is below tolerance times the partial sum. The internode
/// distance cancels. Requires alpha > 2.
double chain_sir_db(double alpha, double tolerance = 1e-12);

}  // namespace pnc
