// Analytic penalty models for carrier-phase, carrier-frequency and
// symbol-time offsets between the two superposing transmitters.
#pragma once

namespace pnc {

/// Offsets between the two arriving signals: carrier phase theta (rad),
/// half the carrier frequency offset times the symbol period, the symbol
/// time offset as a fraction of the period, and the pulse roll-off.
struct SyncOffsets {
    double theta = 0.0;
    double df_t = 0.0;
    double dt_frac = 0.0;
    double beta = 0.5;
};

struct PenaltyResult {
    double penalty_db;
    double desired_power;   // linear factor on the wanted signal
    double isi_variance;    // zero for phase/frequency offsets
};

/// Received-power penalty 10 log10(cos^2(theta/2)) for a receiver mixing
/// at the mid phase. Offsets outside [-pi/2, pi/2) are first folded back
/// by theta -> theta - pi (the data-sign flip does not affect power).
double phase_penalty_db(double theta);

/// Average penalty over theta uniform on [-pi/2, pi/2], averaged in the
/// linear domain: 10 log10(1/pi + 1/2) ~= -0.87 dB.
double phase_penalty_avg_db();

/// Penalty 10 log10(sinc^2(2 df_t)) for carriers at f -+ df. Valid for
/// df_t <= 0.25; the model assumes the offset is small.
double freq_penalty_db(double df_t);

/// Raised-cosine pulse sample p(t/T); p(0) = 1, zero at nonzero integers,
/// removable singularities at t/T = +-1/(2 beta) evaluated analytically.
double raised_cosine(double t_frac, double beta);

/// SINR penalty of sampling midway between two streams offset by dt_frac
/// symbol periods: desired power p(dt/2)^2 against raised-cosine ISI from
/// both streams plus noise at snr0_db. ISI taps truncated at isi_span
/// symbols each side (tails decay as 1/t^3). snr0_db <= 30.
PenaltyResult time_penalty_db(double dt_frac, double beta, double snr0_db, int isi_span = 64);

/// dB-domain average of time_penalty_db over dt_frac uniform on
/// [-1/2, 1/2] (composite Simpson on a fixed grid).
double time_penalty_avg_db(double beta, double snr0_db, int isi_span = 64);

}  // namespace pnc
