#include <doctest.h>

#include <random>

#include "apn/expr.hpp"
#include "apn/spectra.hpp"
#include "oracles.hpp"

using namespace apn;

TEST_CASE("preimage profiles of the cube and the binomial") {
    auto F16 = Field::make(2, 4);
    const auto pp = preimage_profile(from_expression(F16, "x^3"));
    CHECK(pp.image_size == 6);
    CHECK(pp.M_at(1) == 1);
    CHECK(pp.M_at(3) == 5);
    CHECK(pp.N == 46);
    CHECK(is_almost_k_to_1(pp, 3));
    CHECK(almost_k_to_1_value(pp) == 3u);

    const auto pb = preimage_profile(from_expression(F16, "x^3+x^4"));
    CHECK(pb.image_size == 12);
    CHECK(pb.M_at(1) == 10);
    CHECK(pb.M_at(2) == 1);
    CHECK(pb.M_at(4) == 1);

    auto F32 = Field::make(2, 5);
    const auto p32 = preimage_profile(from_expression(F32, "x^3+x^4"));
    CHECK(p32.image_size == 16);
    CHECK(p32.M_at(2) == 16);
    CHECK(is_k_to_1(p32, 2));
    CHECK(p32.N == 64);
}

TEST_CASE("k-to-1 flags") {
    auto F = Field::make(2, 4);
    const auto ident = preimage_profile(tabulate(F, [](Elem x) { return x; }));
    CHECK(is_k_to_1(ident, 1));
    CHECK(ident.is_permutation());
    CHECK_FALSE(almost_k_to_1_value(ident));

    const auto zero = preimage_profile(tabulate(F, [](Elem) { return Elem(0); }));
    CHECK(is_k_to_1(zero, 16));
}

TEST_CASE("differential profiles") {
    for (unsigned n = 3; n <= 10; ++n) {
        auto F = Field::make(2, n);
        const auto dp = differential_profile(from_expression(F, "x^3"));
        CHECK(dp.d == 2);  // Gold cube is APN for every n
    }

    auto F9 = Field::make(3, 2);
    CHECK(differential_profile(from_expression(F9, "x^2")).d == 1);  // planar
    CHECK(differential_profile(from_expression(F9, "x^3")).d == 9);  // Frobenius, linear

    auto F16 = Field::make(2, 4);
    const auto aff = differential_profile(from_expression(F16, "x^2+x+1"));
    CHECK(aff.d == 16);  // affine difference map is constant
}

TEST_CASE("streamed DDT agrees with the naive table") {
    std::mt19937_64 rng(23);
    for (auto [p, n] : {std::pair{2u, 4u}, {2u, 5u}, {3u, 2u}, {5u, 1u}, {7u, 2u}}) {
        auto F = Field::make(p, n);
        for (int it = 0; it < 10; ++it) {
            const MapTable f = oracle::random_map(F, rng);
            const auto dp = differential_profile(f);
            const auto t = oracle::naive_ddt(f);
            CHECK(dp.d == oracle::naive_uniformity(f));
            for (Elem a = 1; a < F->q(); ++a) {
                CHECK(dp.zero_solutions[a] == t[a][0]);
                std::uint32_t row = 0;
                for (Elem b = 0; b < F->q(); ++b) row = std::max(row, t[a][b]);
                CHECK(dp.max_row[a] == row);
            }
        }
    }
}

TEST_CASE("zero-difference balance") {
    auto F16 = Field::make(2, 4);
    const MapTable cube = from_expression(F16, "x^3");
    CHECK(is_zero_difference_balanced(cube, 2));
    CHECK(is_zero_difference_balanced(differential_profile(cube), 2));

    // injective maps are exactly the zero-difference 0-balanced ones
    const MapTable ident = tabulate(F16, [](Elem x) { return x; });
    CHECK(is_zero_difference_balanced(ident, 0));

    auto F32 = Field::make(2, 5);
    CHECK_FALSE(is_zero_difference_balanced(from_expression(F32, "x^3+x^4"), 2));
}

TEST_CASE("differential sets") {
    auto F8 = Field::make(2, 3);
    const auto ds = differential_set(from_expression(F8, "x^3"), 1);
    CHECK(ds.elems.size() == 4);  // 2^(n-1)

    auto F16 = Field::make(2, 4);
    const auto aff = differential_set(from_expression(F16, "x^2+x"), 3);
    CHECK(aff.elems.size() == 1);

    auto F9 = Field::make(3, 2);
    const auto planar = differential_set(from_expression(F9, "x^2"), 1);
    CHECK(planar.elems.size() == 9);  // difference map is a bijection

    CHECK_THROWS_AS(differential_set(from_expression(F8, "x^3"), 0), std::invalid_argument);
}

TEST_CASE("subspace classification") {
    auto F16 = Field::make(2, 4);
    CHECK(subspace_type(*F16, {0}) == SubspaceType::Linear);
    CHECK(subspace_type(*F16, {0, 1, 2, 3}) == SubspaceType::Linear);
    CHECK(subspace_type(*F16, {1, 4, 5}) == SubspaceType::Neither);  // not a 2-power
    CHECK(subspace_type(*F16, {1, 2}) == SubspaceType::Affine);      // 1 + {0, 3}
    CHECK(subspace_type(*F16, {0, 1, 2, 4}) == SubspaceType::Neither);

    // the cube's differential sets are linear subspaces (3-divisible DO)
    const MapTable cube = from_expression(F16, "x^3");
    for (Elem a = 1; a < 16; ++a)
        CHECK(subspace_type(*F16, differential_set(cube, a).elems) == SubspaceType::Linear);

    // odd characteristic: scaling closure matters
    auto F9 = Field::make(3, 2);
    const auto sub = F9->subfield_elements(1);
    CHECK(subspace_type(*F9, sub) == SubspaceType::Linear);
}

TEST_CASE("subspace classification on large binary sets") {
    // spans of random vectors are Linear; remove/perturb an element and the
    // classification drops out
    auto F = Field::make(2, 10);
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<Elem> dist(1, F->q() - 1);
    for (int it = 0; it < 20; ++it) {
        std::vector<Elem> gens;
        for (int g = 0; g < 8; ++g) gens.push_back(dist(rng));
        std::vector<char> in_span(F->q(), 0);
        in_span[0] = 1;
        std::vector<Elem> span{0};
        for (Elem g : gens) {
            if (in_span[g]) continue;
            const std::size_t sz = span.size();
            for (std::size_t i = 0; i < sz; ++i) {
                const Elem v = span[i] ^ g;
                in_span[v] = 1;
                span.push_back(v);
            }
        }
        std::sort(span.begin(), span.end());
        CHECK(subspace_type(*F, span) == SubspaceType::Linear);
        if (span.size() > 64) {
            // a coset is affine, a punctured span is neither
            std::vector<Elem> coset;
            Elem shift = 0;
            while (shift == 0 || in_span[shift]) shift = dist(rng);
            for (Elem v : span) coset.push_back(v ^ shift);
            CHECK(subspace_type(*F, coset) == SubspaceType::Affine);
            std::vector<Elem> punctured(span.begin() + 1, span.end());
            CHECK(subspace_type(*F, punctured) == SubspaceType::Neither);
        }
    }
}

TEST_CASE("crooked maps") {
    auto F16 = Field::make(2, 4);
    CHECK(is_crooked(from_expression(F16, "x^3")));

    auto F32 = Field::make(2, 5);
    CHECK(is_crooked(from_expression(F32, "x^3+x^4")));  // quadratic APN
    CHECK(is_crooked(from_expression(F32, "x^3")));      // AB permutation

    // a non-APN map is not crooked
    CHECK_FALSE(is_crooked(from_expression(F16, "x^7")));
    auto F9 = Field::make(3, 2);
    CHECK_THROWS_AS(is_crooked(from_expression(F9, "x^2")), std::invalid_argument);
}

TEST_CASE("profile consistency holds across random maps") {
    std::mt19937_64 rng(31);
    for (auto [p, n] : {std::pair{2u, 4u}, {2u, 6u}, {3u, 2u}, {3u, 3u}, {5u, 2u}}) {
        auto F = Field::make(p, n);
        for (int it = 0; it < 25; ++it) {
            const MapTable f = oracle::random_map(F, rng);
            const auto pp = preimage_profile(f);
            const auto dp = differential_profile(f);
            CHECK_NOTHROW(check_profile_consistency(f, pp, dp));
        }
        const MapTable perm = oracle::random_permutation(F, rng);
        const auto pp = preimage_profile(perm);
        CHECK(pp.N == F->q());
        CHECK_NOTHROW(check_profile_consistency(perm, pp, differential_profile(perm)));
    }
}

TEST_CASE("exceptional set of a minimal-image map") {
    auto F16 = Field::make(2, 4);
    const auto pp = preimage_profile(from_expression(F16, "x^3"));
    const auto ex = exceptional_set(pp, 2);
    REQUIRE(ex.has_value());
    CHECK(ex->eps == 2);
    CHECK(ex->D == std::vector<Elem>{0});  // only omega(0) = 1 deviates from 3

    // identity on F_16 is far from minimal for d = 2
    const auto ident = preimage_profile(tabulate(F16, [](Elem x) { return x; }));
    CHECK_FALSE(exceptional_set(ident, 2).has_value());
}
