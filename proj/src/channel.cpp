#include "pnc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace pnc {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t derive(std::uint64_t seed, std::uint64_t stream_index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = stream_index ^ 0xD1B54A32D192ED03ull;
    std::uint64_t b = splitmix64(s);
    s = a ^ (b * 0x9E3779B97F4A7C15ull);
    return splitmix64(s);
}

}  // namespace

NoiseStream::NoiseStream(std::uint64_t seed, std::uint64_t stream_index)
    : rng_(derive(seed, stream_index)) {}

double NoiseStream::next_standard_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Polar method; consumes uniforms in a fixed order, so sequences are
    // reproducible for a given stream.
    constexpr double kInv = 1.0 / 9007199254740992.0;  // 2^-53
    for (;;) {
        const double u = (rng_() >> 11) * kInv * 2.0 - 1.0;
        const double v = (rng_() >> 11) * kInv * 2.0 - 1.0;
        const double s = u * u + v * v;
        if (s >= 1.0 || s == 0.0) continue;
        const double k = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * k;
        has_spare_ = true;
        return u * k;
    }
}

NoiseStream make_noise(const ChannelParams& params, std::uint64_t stream_index) {
    if (!(params.n0 > 0.0)) throw std::domain_error("n0 must be positive");
    return NoiseStream(params.seed, stream_index);
}

double p2p_awgn(double a, const ChannelParams& params, NoiseStream& noise) {
    return a + std::sqrt(params.n0 / 2.0) * noise.next_standard_normal();
}

double superpose_awgn(double a1, double a3, const ChannelParams& params, NoiseStream& noise) {
    return a1 + a3 + std::sqrt(params.n0 / 2.0) * noise.next_standard_normal();
}

double chain_sir_db(double alpha, double tolerance) {
    if (!(alpha > 2.0)) throw std::domain_error("interference series diverges for alpha <= 2");
    if (!(tolerance > 0.0)) throw std::domain_error("tolerance must be positive");
    double sum = 0.0;
    for (std::uint64_t l = 1;; ++l) {
        const double term = std::pow(2.0 * l + 1.0, -alpha);
        sum += term;
        if (term < tolerance * sum) break;
    }
    return 10.0 * std::log10(1.0 / (2.0 * sum));
}

}  // namespace pnc
