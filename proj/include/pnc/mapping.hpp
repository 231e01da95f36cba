// Symbol sets, network-code arithmetic, modulation maps and the
// superposition demodulation maps used by a relay that decodes the
// sum of two simultaneously received amplitudes.
#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace pnc {

/// The digital symbol alphabet {0, 1, ..., size-1}.
struct SymbolSet {
    int size = 2;
};

/// Demodulation table h: superposed amplitude -> symbol, one entry per
/// distinct superposition value, sorted by amplitude.
struct DemodTable {
    std::vector<std::pair<double, int>> entries;

    /// Looks up an exact superposition amplitude. Throws
    /// std::invalid_argument if the amplitude is not a valid superposition.
    int demap(double amplitude) const;
};

/// Two symbol pairs that superpose to the same amplitude but disagree
/// under the network-code addition. Their existence proves that no
/// demodulation map exists for the scheme.
struct MappingViolation {
    std::pair<int, int> first_pair;
    std::pair<int, int> second_pair;
    double amplitude = 0.0;
    int first_result = 0;
    int second_result = 0;
};

using MappingCheck = std::variant<DemodTable, MappingViolation>;

/// A network code (alphabet + addition), a modulation map f and an
/// optional demodulation map h filled in by verify_mapping().
struct PncScheme {
    SymbolSet symbol_set;
    std::function<int(int, int)> code_add;
    std::function<double(int)> mod_map;
    std::optional<DemodTable> demod_map;
};

/// In-phase/quadrature bit pair; a QPSK stream is two independent BPSK
/// streams, so no complex type is needed anywhere.
struct QpskStreamPair {
    int in_phase_bit = 0;
    int quadrature_bit = 0;
};

/// BPSK: 0 -> -1, 1 -> +1.
double bpsk_modulate(int bit);

/// Maps a noiseless superposed BPSK amplitude in {-2, 0, +2} to the XOR
/// of the two source bits (1 iff the sum is 0).
int pnc_demap_bpsk_sum(double sum);

/// L-level PAM: m -> 2m - (L-1), image {-(L-1), -(L-3), ..., L-1}.
double pam_modulate(int m, int levels);

/// Network-code addition for PAM: (m_i + m_j) mod L.
int pam_code_add(int m_i, int m_j, int levels);

/// Demodulates a superposed PAM amplitude: (e_sum/2 - 1) mod L,
/// normalized into 0..L-1. The amplitude must be an even integer in
/// [-2(L-1), 2(L-1)].
int pam_pnc_demap(double e_sum, int levels);

/// Exhaustively checks the scheme over all symbol pairs. Returns the
/// complete demodulation table when every superposition value has a
/// consistent network-code result, otherwise the lexicographically
/// smallest conflicting pair of pairs.
MappingCheck verify_mapping(const PncScheme& scheme);

/// L-PAM scheme with mod-L addition; always admits a demodulation map.
PncScheme make_pam_scheme(int levels);

/// BPSK with XOR (the L=2 special case of the PAM scheme).
PncScheme make_bpsk_xor_scheme();

}  // namespace pnc
