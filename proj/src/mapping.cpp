#include "pnc/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace pnc {

namespace {

void require_symbol(int m, int levels, const char* what) {
    if (m < 0 || m >= levels)
        throw std::domain_error(std::string(what) + ": symbol " + std::to_string(m) +
                                " outside 0.." + std::to_string(levels - 1));
}

void require_levels(int levels) {
    if (levels < 2) throw std::domain_error("alphabet size must be at least 2");
}

}  // namespace

int DemodTable::demap(double amplitude) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), amplitude,
                               [](const auto& e, double a) { return e.first < a; });
    if (it == entries.end() || it->first != amplitude)
        throw std::invalid_argument("not a valid superposed amplitude");
    return it->second;
}

double bpsk_modulate(int bit) {
    if (bit != 0 && bit != 1) throw std::domain_error("bit must be 0 or 1");
    return 2.0 * bit - 1.0;
}

int pnc_demap_bpsk_sum(double sum) {
    if (sum != -2.0 && sum != 0.0 && sum != 2.0)
        throw std::invalid_argument("invalid BPSK superposition, expected -2, 0 or +2");
    return sum == 0.0 ? 1 : 0;
}

double pam_modulate(int m, int levels) {
    require_levels(levels);
    require_symbol(m, levels, "pam_modulate");
    return 2.0 * m - (levels - 1);
}

int pam_code_add(int m_i, int m_j, int levels) {
    require_levels(levels);
    require_symbol(m_i, levels, "pam_code_add");
    require_symbol(m_j, levels, "pam_code_add");
    return (m_i + m_j) % levels;
}

int pam_pnc_demap(double e_sum, int levels) {
    require_levels(levels);
    const double limit = 2.0 * (levels - 1);
    const double half = e_sum / 2.0;
    if (e_sum < -limit || e_sum > limit || half != std::floor(half))
        throw std::invalid_argument("invalid PAM superposition amplitude");
    const int r = (static_cast<int>(half) - 1) % levels;
    return r < 0 ? r + levels : r;
}

MappingCheck verify_mapping(const PncScheme& scheme) {
    const int levels = scheme.symbol_set.size;
    require_levels(levels);

    // f must be one-to-one before any superposition makes sense.
    std::map<double, int> image;
    for (int m = 0; m < levels; ++m) {
        auto [it, fresh] = image.emplace(scheme.mod_map(m), m);
        if (!fresh)
            throw std::invalid_argument("mod_map is not one-to-one: symbols " +
                                        std::to_string(it->second) + " and " + std::to_string(m) +
                                        " share an amplitude");
    }

    struct Rep {
        std::pair<int, int> pair;
        int result;
    };
    std::map<double, Rep> table;  // representative decomposition per amplitude

    bool violated = false;
    MappingViolation worst{};
    auto consider = [&](const Rep& a, const Rep& b, double amp) {
        MappingViolation v{a.pair, b.pair, amp, a.result, b.result};
        if (std::tie(b.pair, a.pair) < std::tie(a.pair, b.pair))
            v = MappingViolation{b.pair, a.pair, amp, b.result, a.result};
        if (!violated || std::tie(v.first_pair, v.second_pair) <
                             std::tie(worst.first_pair, worst.second_pair)) {
            worst = v;
            violated = true;
        }
    };

    for (int mi = 0; mi < levels; ++mi) {
        for (int mj = 0; mj < levels; ++mj) {
            const double amp = scheme.mod_map(mi) + scheme.mod_map(mj);
            const Rep rep{{mi, mj}, scheme.code_add(mi, mj)};
            auto it = table.find(amp);
            if (it == table.end()) {
                table.emplace(amp, rep);
            } else if (it->second.result != rep.result) {
                consider(it->second, rep, amp);
            }
        }
    }
    if (violated) {
        // Report the smallest conflicting pair-of-pairs, not just the first
        // conflict with the stored representative.
        for (int mi = 0; mi < levels; ++mi)
            for (int mj = 0; mj < levels; ++mj)
                for (int mp = 0; mp < levels; ++mp)
                    for (int mq = 0; mq < levels; ++mq) {
                        if (std::pair{mp, mq} <= std::pair{mi, mj}) continue;
                        if (scheme.mod_map(mi) + scheme.mod_map(mj) !=
                            scheme.mod_map(mp) + scheme.mod_map(mq))
                            continue;
                        if (scheme.code_add(mi, mj) == scheme.code_add(mp, mq)) continue;
                        consider({{mi, mj}, scheme.code_add(mi, mj)},
                                 {{mp, mq}, scheme.code_add(mp, mq)},
                                 scheme.mod_map(mi) + scheme.mod_map(mj));
                    }
        return worst;
    }

    DemodTable out;
    out.entries.reserve(table.size());
    for (const auto& [amp, rep] : table) out.entries.emplace_back(amp, rep.result);
    return out;
}

PncScheme make_pam_scheme(int levels) {
    require_levels(levels);
    PncScheme s;
    s.symbol_set.size = levels;
    s.code_add = [levels](int a, int b) { return pam_code_add(a, b, levels); };
    s.mod_map = [levels](int m) { return pam_modulate(m, levels); };
    if (auto check = verify_mapping(s); std::holds_alternative<DemodTable>(check))
        s.demod_map = std::get<DemodTable>(check);
    return s;
}

PncScheme make_bpsk_xor_scheme() { return make_pam_scheme(2); }

}  // namespace pnc
