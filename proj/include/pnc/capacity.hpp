// Per-cycle information capacity of the two-way relay channel under the
// traditional, network-coding and superposition relaying schemes, with
// upper/lower bounds for the superposition multiple-access stage.
#pragma once

#include <span>
#include <vector>

namespace pnc {

/// Crossover probabilities of the hard-decided three-level channel:
///   p1 = P(decide +-2 | sum 0), each side
///   p2 = P(decide 0 | sum +-2)
///   p3 = P(decide -+2 | sum +-2)
struct CrossoverProbs {
    double p1;
    double p2;
    double p3;
};

struct CapacityReport {
    double snr_db;
    double c_traditional;
    double c_snc;
    double c_pnc_upper;
    double c_pnc_lower;
    double gain_upper;
    double gain_lower;
    double gain_snc;
};

/// Shannon entropy in bits of the distribution formed by `probs` plus the
/// implicit remainder 1 - sum(probs). 0 log 0 = 0. Throws on probabilities
/// outside [0,1] or a sum beyond 1 + 1e-12.
double entropy(std::span<const double> probs);

/// Binary-list convenience overloads.
double entropy(double p);
double entropy(double p, double q);

/// Crossover probabilities at the optimal thresholds for noise density n0.
CrossoverProbs crossover_probs(double n0);

/// 1 - H(p).
double bsc_capacity(double p);

/// (1 - H(p))/4: four slots per exchanged frame pair.
double cap_traditional(double n0);

/// (1 - H(p))/3: three slots per exchanged frame pair.
double cap_snc(double n0);

/// Upper bound: ternary-channel mutual information scaled by the
/// binary-mapping entropy ratio, harmonically combined with the
/// broadcast BSC capacity over the two-slot cycle.
double cap_pnc_upper(double n0);

/// Lower bound achieved by linear codes over the equivalent binary
/// channel: H((1-2p1+p2)/2) - H(2p1)/2 - H(p2)/2, clamped at 0,
/// harmonically combined with the broadcast capacity.
double cap_pnc_lower(double n0);

/// One report per SNR point; n0 = 10^(-snr_db/10).
std::vector<CapacityReport> gain_table(std::span<const double> snr_db);

}  // namespace pnc
