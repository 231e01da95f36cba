#include "pnc/detect.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pnc {

double q_func(double x) {
    const double q = 0.5 * std::erfc(x / std::sqrt(2.0));
    return std::clamp(q, 0.0, 1.0);
}

Thresholds optimal_thresholds(double n0) {
    if (!(n0 > 0.0)) throw std::domain_error("n0 must be positive");
    // exp(-8/n0) underflows for tiny n0; expm1 keeps the log factor exact.
    const double g2 = 1.0 + (n0 / 4.0) * std::log1p(std::sqrt(-std::expm1(-8.0 / n0)));
    return {-g2, g2};
}

double map_likelihood_ratio(double r, double n0) {
    if (!(n0 > 0.0)) throw std::domain_error("n0 must be positive");
    // 2 exp(-r^2/N0) / [exp(-(r-2)^2/N0) + exp(-(r+2)^2/N0)], with the
    // common Gaussian factor cancelled for numerical range.
    return 2.0 / (std::exp((4.0 * r - 4.0) / n0) + std::exp((-4.0 * r - 4.0) / n0));
}

int detect_xor(double r, const Thresholds& thresholds) {
    return (thresholds.gamma1 < r && r < thresholds.gamma2) ? 1 : 0;
}

double ber_bpsk(double n0) {
    if (!(n0 > 0.0)) throw std::domain_error("n0 must be positive");
    return q_func(std::sqrt(2.0 / n0));
}

double ber_snc_xor(double n0) {
    const double p = ber_bpsk(n0);
    return 2.0 * p * (1.0 - p);
}

double ber_pnc_xor(double n0) {
    const double g2 = optimal_thresholds(n0).gamma2;
    const double v = std::sqrt(2.0 / n0);
    // Tail mass of the sum-zero hypothesis plus half the inner mass of the
    // sum-two hypotheses (both signs together).
    return q_func(g2 * v) + 0.5 * (1.0 - q_func((g2 - 2.0) * v) - q_func((g2 + 2.0) * v));
}

double ber_end_to_end(std::span<const double> per_hop) {
    double sum = 0.0;
    for (double p : per_hop) {
        if (!(p >= 0.0 && p < 0.5)) throw std::domain_error("per-hop BER must lie in [0, 0.5)");
        sum += p;
    }
    return sum;
}

namespace {

std::uint64_t run_shard(McScheme scheme, double n0, std::uint64_t trials,
                        const ChannelParams& params, std::uint64_t stream_index,
                        const Thresholds& thr) {
    NoiseStream ns(params.seed, stream_index);
    const double sigma = std::sqrt(n0 / 2.0);
    std::uint64_t errors = 0;
    switch (scheme) {
        case McScheme::TraditionalHop:
            for (std::uint64_t t = 0; t < trials; ++t) {
                const int b = static_cast<int>(ns.next_word() & 1u);
                const double r = (2.0 * b - 1.0) + sigma * ns.next_standard_normal();
                errors += (r > 0.0 ? 1 : 0) != b;
            }
            break;
        case McScheme::SncXor:
            for (std::uint64_t t = 0; t < trials; ++t) {
                const std::uint64_t w = ns.next_word();
                const int b1 = static_cast<int>(w & 1u);
                const int b3 = static_cast<int>((w >> 1) & 1u);
                const double r1 = (2.0 * b1 - 1.0) + sigma * ns.next_standard_normal();
                const double r3 = (2.0 * b3 - 1.0) + sigma * ns.next_standard_normal();
                const int x = (r1 > 0.0 ? 1 : 0) ^ (r3 > 0.0 ? 1 : 0);
                errors += x != (b1 ^ b3);
            }
            break;
        case McScheme::PncXor:
            for (std::uint64_t t = 0; t < trials; ++t) {
                const std::uint64_t w = ns.next_word();
                const int b1 = static_cast<int>(w & 1u);
                const int b3 = static_cast<int>((w >> 1) & 1u);
                const double r =
                    (2.0 * b1 - 1.0) + (2.0 * b3 - 1.0) + sigma * ns.next_standard_normal();
                errors += detect_xor(r, thr) != (b1 ^ b3);
            }
            break;
    }
    return errors;
}

}  // namespace

BerEstimate ber_monte_carlo(McScheme scheme, double n0, std::uint64_t trials,
                            const ChannelParams& params, const McOptions& options) {
    if (!(n0 > 0.0)) throw std::domain_error("n0 must be positive");
    if (trials < 10000) throw std::invalid_argument("at least 10^4 trials required");
    const std::uint64_t shards = std::max<std::uint64_t>(options.shards, 1);

    const Thresholds thr = optimal_thresholds(n0);

    std::vector<std::uint64_t> shard_errors(shards, 0);
    auto shard_trials = [&](std::uint64_t k) { return trials / shards + (k < trials % shards); };

    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(shards));
    if (threads == 1) {
        for (std::uint64_t k = 0; k < shards; ++k)
            shard_errors[k] = run_shard(scheme, n0, shard_trials(k), params,
                                        options.stream_base + k, thr);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::uint64_t> next{0};
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::uint64_t k; (k = next.fetch_add(1)) < shards;)
                    shard_errors[k] = run_shard(scheme, n0, shard_trials(k), params,
                                                options.stream_base + k, thr);
            });
        for (auto& th : pool) th.join();
    }

    std::uint64_t errors = 0;
    for (auto e : shard_errors) errors += e;
    BerEstimate est;
    est.errors = errors;
    est.trials = trials;
    est.p_hat = static_cast<double>(errors) / static_cast<double>(trials);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
    return est;
}

}  // namespace pnc
