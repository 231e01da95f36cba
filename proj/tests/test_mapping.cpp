#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pnc/mapping.hpp"

using namespace pnc;

TEST_CASE("bpsk modulation") {
    CHECK(bpsk_modulate(1) == 1.0);
    CHECK(bpsk_modulate(0) == -1.0);
    for (int b : {0, 1}) CHECK(std::abs(bpsk_modulate(b)) == 1.0);
    CHECK_THROWS_AS(bpsk_modulate(2), std::domain_error);
}

TEST_CASE("bpsk superposition demap follows the relay table") {
    CHECK(pnc_demap_bpsk_sum(2.0) == 0);
    CHECK(pnc_demap_bpsk_sum(0.0) == 1);
    CHECK(pnc_demap_bpsk_sum(-2.0) == 0);
    CHECK_THROWS_AS(pnc_demap_bpsk_sum(1.0), std::invalid_argument);
    // the demap equals the XOR of the source bits for all four bit pairs
    for (int b1 : {0, 1})
        for (int b3 : {0, 1})
            CHECK(pnc_demap_bpsk_sum(bpsk_modulate(b1) + bpsk_modulate(b3)) == (b1 ^ b3));
}

TEST_CASE("pam modulation") {
    CHECK(pam_modulate(0, 4) == -3.0);
    CHECK(pam_modulate(3, 4) == 3.0);
    CHECK(pam_modulate(0, 2) == bpsk_modulate(0));
    CHECK(pam_modulate(1, 2) == bpsk_modulate(1));
    CHECK_THROWS_AS(pam_modulate(4, 4), std::domain_error);
    CHECK_THROWS_AS(pam_modulate(-1, 4), std::domain_error);
}

TEST_CASE("pam code addition") {
    CHECK(pam_code_add(1, 3, 4) == 0);
    CHECK(pam_code_add(3, 3, 4) == 2);
    for (int m = 0; m < 8; ++m) CHECK(pam_code_add(0, m, 8) == m);
}

TEST_CASE("pam superposition demap") {
    CHECK(pam_pnc_demap(-6.0, 4) == 0);
    CHECK(pam_pnc_demap(0.0, 4) == 3);
    CHECK_THROWS_AS(pam_pnc_demap(1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(pam_pnc_demap(8.0, 4), std::invalid_argument);
    // every decomposition of a superposed amplitude gives the same result
    for (int L : {2, 4, 8, 16}) {
        for (int mi = 0; mi < L; ++mi)
            for (int mj = 0; mj < L; ++mj) {
                const double e = pam_modulate(mi, L) + pam_modulate(mj, L);
                CHECK(pam_pnc_demap(e, L) == pam_code_add(mi, mj, L));
            }
    }
}

TEST_CASE("table II reproduced cell for cell") {
    // columns: m_i, m_j, e_i, e_j, e_i+e_j, h(e_i+e_j), (m_i+m_j) mod 4
    const int rows[16][7] = {
        {0, 0, -3, -3, -6, 0, 0}, {0, 1, -3, -1, -4, 1, 1}, {0, 2, -3, 1, -2, 2, 2},
        {0, 3, -3, 3, 0, 3, 3},   {1, 0, -1, -3, -4, 1, 1}, {1, 1, -1, -1, -2, 2, 2},
        {1, 2, -1, 1, 0, 3, 3},   {1, 3, -1, 3, 2, 0, 0},   {2, 0, 1, -3, -2, 2, 2},
        {2, 1, 1, -1, 0, 3, 3},   {2, 2, 1, 1, 2, 0, 0},    {2, 3, 1, 3, 4, 1, 1},
        {3, 0, 3, -3, 0, 3, 3},   {3, 1, 3, -1, 2, 0, 0},   {3, 2, 3, 1, 4, 1, 1},
        {3, 3, 3, 3, 6, 2, 2}};
    for (const auto& r : rows) {
        CHECK(pam_modulate(r[0], 4) == r[2]);
        CHECK(pam_modulate(r[1], 4) == r[3]);
        CHECK(r[2] + r[3] == r[4]);
        CHECK(pam_pnc_demap(r[4], 4) == r[5]);
        CHECK(pam_code_add(r[0], r[1], 4) == r[6]);
        CHECK(r[5] == r[6]);
    }
}

TEST_CASE("verify_mapping builds the 4-PAM table") {
    auto check = verify_mapping(make_pam_scheme(4));
    REQUIRE(std::holds_alternative<DemodTable>(check));
    const auto& table = std::get<DemodTable>(check);
    REQUIRE(table.entries.size() == 7);
    const std::pair<double, int> expect[] = {{-6, 0}, {-4, 1}, {-2, 2}, {0, 3},
                                             {2, 0},  {4, 1},  {6, 2}};
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(table.entries[i].first == expect[i].first);
        CHECK(table.entries[i].second == expect[i].second);
        CHECK(table.demap(expect[i].first) == expect[i].second);
    }
    CHECK_THROWS_AS(table.demap(1.0), std::invalid_argument);
}

TEST_CASE("verify_mapping builds the BPSK table") {
    auto check = verify_mapping(make_bpsk_xor_scheme());
    REQUIRE(std::holds_alternative<DemodTable>(check));
    const auto& table = std::get<DemodTable>(check);
    REQUIRE(table.entries.size() == 3);
    CHECK(table.demap(-2.0) == 0);
    CHECK(table.demap(0.0) == 1);
    CHECK(table.demap(2.0) == 0);
}

TEST_CASE("mapping requirement holds exhaustively for L-PAM") {
    for (int L : {2, 4, 8}) {
        auto scheme = make_pam_scheme(L);
        REQUIRE(scheme.demod_map.has_value());
        for (int mi = 0; mi < L; ++mi)
            for (int mj = 0; mj < L; ++mj) {
                const double e = scheme.mod_map(mi) + scheme.mod_map(mj);
                CHECK(scheme.demod_map->demap(e) == scheme.code_add(mi, mj));
            }
    }
}

TEST_CASE("demod table agrees with the closed-form demap") {
    for (int L : {2, 4, 8, 16}) {
        auto scheme = make_pam_scheme(L);
        REQUIRE(scheme.demod_map.has_value());
        for (const auto& [amp, sym] : scheme.demod_map->entries)
            CHECK(pam_pnc_demap(amp, L) == sym);
        CHECK(scheme.demod_map->entries.size() == 2 * L - 1);
    }
}

TEST_CASE("bitwise XOR over 4-PAM violates the mapping requirement") {
    PncScheme bad;
    bad.symbol_set.size = 4;
    bad.mod_map = [](int m) { return pam_modulate(m, 4); };
    bad.code_add = [](int a, int b) { return a ^ b; };

    auto check = verify_mapping(bad);
    REQUIRE(std::holds_alternative<MappingViolation>(check));
    const auto& v = std::get<MappingViolation>(check);

    // independently enumerate all conflicts and find the smallest
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> conflicts;
    for (int mi = 0; mi < 4; ++mi)
        for (int mj = 0; mj < 4; ++mj)
            for (int mp = 0; mp < 4; ++mp)
                for (int mq = 0; mq < 4; ++mq) {
                    if (std::pair{mi, mj} >= std::pair{mp, mq}) continue;
                    if (bad.mod_map(mi) + bad.mod_map(mj) != bad.mod_map(mp) + bad.mod_map(mq))
                        continue;
                    if ((mi ^ mj) == (mp ^ mq)) continue;
                    conflicts.insert({{mi, mj}, {mp, mq}});
                }
    REQUIRE(!conflicts.empty());
    CHECK(v.first_pair == conflicts.begin()->first);
    CHECK(v.second_pair == conflicts.begin()->second);
    CHECK(v.first_result != v.second_result);
    CHECK(bad.mod_map(v.first_pair.first) + bad.mod_map(v.first_pair.second) == v.amplitude);
    CHECK(bad.mod_map(v.second_pair.first) + bad.mod_map(v.second_pair.second) == v.amplitude);
}

TEST_CASE("non-injective modulation map is rejected") {
    PncScheme bad;
    bad.symbol_set.size = 3;
    bad.mod_map = [](int m) { return m == 2 ? 0.0 : static_cast<double>(m); };
    bad.code_add = [](int a, int b) { return (a + b) % 3; };
    CHECK_THROWS_AS(verify_mapping(bad), std::invalid_argument);
}

TEST_CASE("representative decomposition is immaterial when the condition holds") {
    // every decomposition of each amplitude yields the demod table value
    auto scheme = make_pam_scheme(8);
    for (int mi = 0; mi < 8; ++mi)
        for (int mj = 0; mj < 8; ++mj) {
            const double e = scheme.mod_map(mi) + scheme.mod_map(mj);
            CHECK(scheme.demod_map->demap(e) == pam_code_add(mi, mj, 8));
        }
}
