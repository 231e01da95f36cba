#include "pnc/syncerr.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pnc {

namespace {

constexpr double kPi = std::numbers::pi;

double to_db(double power) { return 10.0 * std::log10(power); }

}  // namespace

double phase_penalty_db(double theta) {
    if (!std::isfinite(theta)) throw std::domain_error("phase offset must be finite");
    // Fold into [-pi/2, pi/2); outside that range the second signal is
    // taken with flipped sign, which leaves the power untouched.
    while (theta >= kPi / 2.0) theta -= kPi;
    while (theta < -kPi / 2.0) theta += kPi;
    const double c = std::cos(theta / 2.0);
    return to_db(c * c);
}

double phase_penalty_avg_db() { return to_db(1.0 / kPi + 0.5); }

double freq_penalty_db(double df_t) {
    if (!(df_t >= 0.0)) throw std::domain_error("frequency offset must be nonnegative");
    if (df_t > 0.25) throw std::domain_error("frequency offset outside the small-offset model");
    if (df_t == 0.0) return 0.0;
    const double x = 2.0 * kPi * df_t;
    const double s = std::sin(x) / x;
    return to_db(s * s);
}

double raised_cosine(double t_frac, double beta) {
    if (!(beta > 0.0 && beta <= 1.0)) throw std::domain_error("roll-off must lie in (0, 1]");
    if (t_frac == 0.0) return 1.0;
    const double denom_roll = 1.0 - 4.0 * beta * beta * t_frac * t_frac;
    if (std::abs(denom_roll) < 1e-11) {
        // t = +-T/(2 beta): both cos and the roll-off factor vanish.
        return (beta / 2.0) * std::sin(kPi / (2.0 * beta));
    }
    return std::sin(kPi * t_frac) * std::cos(kPi * beta * t_frac) /
           (kPi * t_frac * denom_roll);
}

PenaltyResult time_penalty_db(double dt_frac, double beta, double snr0_db, int isi_span) {
    if (!(std::abs(dt_frac) <= 0.5)) throw std::domain_error("time offset beyond half a symbol");
    if (isi_span < 16) throw std::domain_error("isi_span must be at least 16");
    if (snr0_db > 30.0) throw std::domain_error("snr0 above 30 dB is outside the model");

    const double d = dt_frac / 2.0;  // sampling midway between the two streams
    const double desired = raised_cosine(d, beta) * raised_cosine(d, beta);

    // Independent unit-power symbols on both streams; cross terms vanish,
    // each tap contributes its squared amplitude at 1/4 weight from the
    // halved combined signal.
    double isi = 0.0;
    for (int m = 1; m <= isi_span; ++m) {
        const double plus = raised_cosine(m + d, beta);
        const double minus = raised_cosine(m - d, beta);
        isi += 2.0 * 0.25 * (plus * plus + minus * minus);  // offsets +-m
    }

    const double noise = std::pow(10.0, -snr0_db / 10.0);
    PenaltyResult r;
    r.desired_power = desired;
    r.isi_variance = isi;
    r.penalty_db = to_db(desired) - to_db((isi + noise) / noise);
    return r;
}

double time_penalty_avg_db(double beta, double snr0_db, int isi_span) {
    // Composite Simpson over dt uniform on [-1/2, 1/2], averaged in dB as
    // the penalty is defined.
    constexpr int kIntervals = 1024;
    const double h = 1.0 / kIntervals;
    double sum = 0.0;
    for (int i = 0; i <= kIntervals; ++i) {
        const double t = -0.5 + i * h;
        const double w = (i == 0 || i == kIntervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * time_penalty_db(t, beta, snr0_db, isi_span).penalty_db;
    }
    return sum * h / 3.0;
}

}  // namespace pnc
