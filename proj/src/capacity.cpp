#include "pnc/capacity.hpp"

#include <cmath>
#include <stdexcept>

#include "pnc/detect.hpp"

namespace pnc {

namespace {

double plog2p(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

double entropy(std::span<const double> probs) {
    double sum = 0.0;
    double h = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability outside [0,1]");
        sum += p;
        h += plog2p(p);
    }
    if (sum > 1.0 + 1e-12) throw std::domain_error("probabilities sum beyond 1");
    return h + plog2p(std::max(0.0, 1.0 - sum));
}

double entropy(double p) {
    const double a[] = {p};
    return entropy(std::span<const double>(a));
}

double entropy(double p, double q) {
    const double a[] = {p, q};
    return entropy(std::span<const double>(a));
}

CrossoverProbs crossover_probs(double n0) {
    const double g2 = optimal_thresholds(n0).gamma2;
    const double v = std::sqrt(2.0 / n0);
    CrossoverProbs c;
    c.p1 = q_func(g2 * v);
    // Single expression covering both printed branches (gamma2 above or
    // below 2) via Q(-x) = 1 - Q(x).
    c.p2 = 1.0 - q_func((g2 - 2.0) * v) - q_func((g2 + 2.0) * v);
    c.p3 = q_func((g2 + 2.0) * v);
    return c;
}

double bsc_capacity(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("crossover probability outside [0,1]");
    return 1.0 - entropy(p);
}

double cap_traditional(double n0) { return bsc_capacity(ber_bpsk(n0)) / 4.0; }

double cap_snc(double n0) { return bsc_capacity(ber_bpsk(n0)) / 3.0; }

double cap_pnc_upper(double n0) {
    const auto [p1, p2, p3] = crossover_probs(n0);
    // Hard-decided output distribution: +-2 with mass (1-p2+2p1)/4 each.
    const double q = (1.0 - p2 + 2.0 * p1) / 4.0;
    const double h_out = entropy(q, q);
    const double mi_ternary = h_out - 0.5 * (entropy(p2, p3) + entropy(p1, p1));
    // Scale by the entropy lost collapsing +-2 onto the single bit 0.
    const double mac_upper = mi_ternary * entropy(2.0 * q) / h_out;
    const double broadcast = bsc_capacity(ber_bpsk(n0));
    return 1.0 / (1.0 / mac_upper + 1.0 / broadcast);
}

double cap_pnc_lower(double n0) {
    const auto [p1, p2, p3] = crossover_probs(n0);
    const double mac_lower = entropy((1.0 - 2.0 * p1 + p2) / 2.0) -
                             entropy(2.0 * p1) / 2.0 - entropy(p2) / 2.0;
    if (!(mac_lower > 0.0)) return 0.0;  // deep noise: rows coincide
    const double broadcast = bsc_capacity(ber_bpsk(n0));
    return 1.0 / (1.0 / mac_lower + 1.0 / broadcast);
}

std::vector<CapacityReport> gain_table(std::span<const double> snr_db) {
    std::vector<CapacityReport> out;
    out.reserve(snr_db.size());
    for (double snr : snr_db) {
        const double n0 = std::pow(10.0, -snr / 10.0);
        CapacityReport r;
        r.snr_db = snr;
        r.c_traditional = cap_traditional(n0);
        r.c_snc = cap_snc(n0);
        r.c_pnc_upper = cap_pnc_upper(n0);
        r.c_pnc_lower = cap_pnc_lower(n0);
        r.gain_upper = r.c_pnc_upper / r.c_traditional;
        r.gain_lower = r.c_pnc_lower / r.c_traditional;
        r.gain_snc = r.c_snc / r.c_traditional;
        out.push_back(r);
    }
    return out;
}

}  // namespace pnc
