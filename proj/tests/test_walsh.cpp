#include <doctest.h>

#include <numeric>
#include <random>

#include "apn/expr.hpp"
#include "apn/families.hpp"
#include "apn/walsh.hpp"
#include "oracles.hpp"

using namespace apn;

TEST_CASE("FWHT agrees with the naive transform") {
    std::mt19937_64 rng(41);
    for (unsigned n = 1; n <= 6; ++n) {
        auto F = Field::make(2, n);
        std::vector<MapTable> maps;
        maps.push_back(from_expression(F, "x^3"));
        for (int it = 0; it < 5; ++it) maps.push_back(oracle::random_map(F, rng));
        for (const auto& f : maps)
            for (Elem b = 1; b < F->q(); ++b) {
                const auto w = component_spectrum(f, b);
                for (Elem a = 0; a < F->q(); ++a)
                    CHECK(w[a] == oracle::naive_walsh(f, b, a));
            }
    }
}

TEST_CASE("linear map has a delta spectrum") {
    auto F = Field::make(2, 4);
    const MapTable ident = tabulate(F, [](Elem x) { return x; });
    for (Elem b = 1; b < 16; ++b) {
        const auto w = component_spectrum(ident, b);
        for (Elem a = 0; a < 16; ++a) CHECK(w[a] == (a == b ? 16 : 0));
    }
}

TEST_CASE("cube on F_8 is AB with values {0, +-4}") {
    auto F = Field::make(2, 3);
    const MapTable cube = from_expression(F, "x^3");
    for (Elem b = 1; b < 8; ++b)
        for (std::int32_t v : component_spectrum(cube, b))
            CHECK((v == 0 || v == 4 || v == -4));
    const auto wp = full_profile(cube);
    CHECK(is_almost_bent(wp));
    CHECK(wp.almost_bent);
}

TEST_CASE("cube on F_16: the r=1 spectrum facts") {
    auto F = Field::make(2, 4);
    const auto wp = full_profile(from_expression(F, "x^3"));
    CHECK(wp.bent_count == 10);
    CHECK(wp.amplitude_count(2) == 5);
    for (Elem b = 1; b < 16; ++b)
        CHECK((wp.comps[b].w0 == 4 || wp.comps[b].w0 == -8));
    CHECK(wp.component_wise_plateaued);
    CHECK(wp.classical);
    CHECK(is_classical_spectrum(wp));
    // multiset multiplicities (60, 160, 20)
    CHECK(wp.abs_spectrum.at(0) == 60);
    CHECK(wp.abs_spectrum.at(4) == 160);
    CHECK(wp.abs_spectrum.at(8) == 20);
}

TEST_CASE("cube on F_32 is a balanced permutation") {
    auto F = Field::make(2, 5);
    const auto wp = full_profile(from_expression(F, "x^3"));
    CHECK(wp.balanced_count == 31);
    CHECK(wp.N0 == 31);
    CHECK(wp.Nplus == 0);
    CHECK(wp.Nminus == 0);
    CHECK(wp.almost_bent);
}

TEST_CASE("zero-only profile matches the full profile on W(b,0)") {
    auto F = Field::make(2, 5);
    const MapTable f = from_expression(F, "x^3+x^4");
    const auto full = full_profile(f);
    const auto zero = zero_only_profile(f);
    for (Elem b = 1; b < 32; ++b) CHECK(full.comps[b].w0 == zero.comps[b].w0);
    CHECK(full.balanced_count == zero.balanced_count);
    CHECK(full.N0 == zero.N0);
    CHECK(full.Nplus == zero.Nplus);
    CHECK(full.Nminus == zero.Nminus);
}

TEST_CASE("Walsh sum rules tie into the preimage profile") {
    std::mt19937_64 rng(43);
    for (unsigned n = 2; n <= 6; ++n) {
        auto F = Field::make(2, n);
        for (int it = 0; it < 8; ++it) {
            const MapTable f = oracle::random_map(F, rng);
            const auto wp = full_profile(f);
            const auto pp = preimage_profile(f);
            std::int64_t s = std::int64_t(F->q());  // b = 0 term
            std::int64_t s2 = std::int64_t(F->q()) * F->q();
            for (Elem b = 1; b < F->q(); ++b) {
                s += wp.comps[b].w0;
                s2 += wp.comps[b].w0 * wp.comps[b].w0;
            }
            CHECK(s == std::int64_t(F->q()) * pp.omega[0]);
            CHECK(s2 == std::int64_t(F->q()) * std::int64_t(pp.N));
        }
    }
}

TEST_CASE("AB statistics") {
    auto F8 = Field::make(2, 3);
    const auto st = ab_statistics(from_expression(F8, "x^3"));
    CHECK(st.N0 == 7);
    CHECK(st.Nplus == 0);
    CHECK(st.Nminus == 0);

    auto F32 = Field::make(2, 5);
    const MapTable b = from_expression(F32, "x^3+x^4");
    REQUIRE(preimage_profile(b).omega[0] == 2);  // already normalized
    const auto sb = ab_statistics(b);
    CHECK(sb.N0 == 15);
    CHECK(sb.Nplus == 10);
    CHECK(sb.Nminus == 6);
    CHECK(sb.N0 % 2 == 1);  // balanced-component count is odd

    auto F16 = Field::make(2, 4);
    CHECK_THROWS_AS(ab_statistics(from_expression(F16, "x^3")), std::invalid_argument);
    const MapTable ident32 = tabulate(F32, [](Elem x) { return x; });
    CHECK_THROWS_AS(ab_statistics(ident32), std::invalid_argument);  // not AB
}

TEST_CASE("almost bent implies APN (contrapositive on random maps)") {
    std::mt19937_64 rng(59);
    auto F = Field::make(2, 5);
    int non_apn_seen = 0;
    for (int it = 0; it < 30; ++it) {
        const MapTable f = oracle::random_map(F, rng);
        const auto wp = full_profile(f);
        if (differential_profile(f).d > 2) {
            ++non_apn_seen;
            CHECK_FALSE(is_almost_bent(wp));
        }
    }
    CHECK(non_apn_seen > 0);  // random maps are essentially never APN

    // a linear permutation is plateaued with amplitude n, never AB
    const auto wsq = full_profile(from_expression(F, "x^2"));
    CHECK_FALSE(is_almost_bent(wsq));
    CHECK(wsq.component_wise_plateaued);
}

TEST_CASE("bent component counts") {
    auto F = Field::make(2, 4);
    CHECK(bent_component_count(full_profile(from_expression(F, "x^3"))) == 10);
    CHECK(bent_component_count(full_profile(tabulate(F, [](Elem x) { return x; }))) == 0);

    // x^5 on F_16 is almost-5-to-1 (gcd(5,15) = 5) with the maximum count
    const auto wp = full_profile(from_expression(F, "x^5"));
    CHECK(bent_component_count(wp) == 12);
    CHECK(wp.amplitude_count(4) == 3);
}

TEST_CASE("Dobbertin map has a non-classical spectrum") {
    const MapTable f = families::named_example("dobbertin-g2");
    const auto pp = preimage_profile(f);
    CHECK(is_almost_k_to_1(pp, 3));
    const auto wp = full_profile(f);
    CHECK_FALSE(wp.classical);
    CHECK_FALSE(is_classical_spectrum(wp));
}

TEST_CASE("gcd closed forms match integer brute force") {
    for (unsigned i = 1; i <= 24; ++i)
        for (unsigned r = 1; r <= 24; ++r) {
            const std::uint64_t a = (std::uint64_t(1) << i) - 1;
            const std::uint64_t b = (std::uint64_t(1) << i) + 1;
            const std::uint64_t c = (std::uint64_t(1) << r) + 1;
            CHECK(gcd_2pow_minus1_2pow_plus1(i, r) == std::gcd(a, c));
            CHECK(gcd_2pow_plus1_2pow_plus1(i, r) == std::gcd(b, c));
        }
}

TEST_CASE("walsh caps and guards") {
    auto F9 = Field::make(3, 2);
    const MapTable f9 = tabulate(F9, [](Elem x) { return x; });
    CHECK_THROWS_AS(full_profile(f9), std::invalid_argument);  // p != 2

    auto F = Field::make(2, 5);
    const MapTable f = from_expression(F, "x^3");
    CHECK_THROWS_AS(full_profile(f, 4), std::runtime_error);  // cap exceeded
    CHECK_THROWS_AS(component_spectrum(f, 0), std::invalid_argument);
}
