// MAP decision thresholds for superposed BPSK reception, analytic BER for
// the three relaying schemes, and Monte Carlo BER estimation.
#pragma once

#include <cstdint>
#include <span>

#include "pnc/channel.hpp"

namespace pnc {

/// Symmetric decision thresholds: declare the superposed amplitude zero
/// iff gamma1 < r < gamma2, with gamma1 = -gamma2.
struct Thresholds {
    double gamma1;
    double gamma2;
};

struct BerEstimate {
    std::uint64_t errors = 0;
    std::uint64_t trials = 0;
    double p_hat = 0.0;
    double std_err = 0.0;
};

enum class McScheme { TraditionalHop, SncXor, PncXor };

struct McOptions {
    std::uint64_t shards = 8;     // fixed shard count; results depend on it
    unsigned threads = 0;         // 0 = min(shards, hardware)
    std::uint64_t stream_base = 0;
};

/// Gaussian tail probability Q(x); relative error below 1e-12 for |x| <= 8,
/// clamped to [0,1] with absolute error under 1e-300 beyond.
double q_func(double x);

/// Closed-form MAP thresholds:
///   gamma2 = 1 + (N0/4) ln(1 + sqrt(1 - exp(-8/N0))), gamma1 = -gamma2.
Thresholds optimal_thresholds(double n0);

/// Posterior likelihood ratio P(sum=0 | r) / P(sum!=0 | r) for uniform
/// source bits. Equals 1 exactly at the optimal thresholds.
double map_likelihood_ratio(double r, double n0);

/// 1 iff gamma1 < r < gamma2. Boundary values go to the outer region.
int detect_xor(double r, const Thresholds& thresholds);

/// Single BPSK hop: Q(sqrt(2/N0)).
double ber_bpsk(double n0);

/// XOR of two independently received bits: 2p(1-p) with p = ber_bpsk.
double ber_snc_xor(double n0);

/// XOR bit recovered from the superposed amplitudes with the optimal
/// thresholds, in closed form via Q-function differences.
double ber_pnc_xor(double n0);

/// Small-BER approximation of the end-to-end BER: sum of per-hop BERs.
/// Each entry must lie in [0, 0.5).
double ber_end_to_end(std::span<const double> per_hop);

/// Fixed-trial Monte Carlo estimate of the per-reception BER for one of
/// the three schemes. Deterministic for fixed (seed, stream_base, shards);
/// the thread count never changes the result. Requires trials >= 10^4.
BerEstimate ber_monte_carlo(McScheme scheme, double n0, std::uint64_t trials,
                            const ChannelParams& params, const McOptions& options = {});

}  // namespace pnc
