#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "wv/sections.hpp"

using wv::BigInt;
using wv::Family;
using wv::Kind;
using wv::RootSystem;
using wv::Weight;
using wv::WonderfulVariety;

namespace {

std::vector<WonderfulVariety> catalog_varieties(int max_n) {
    std::vector<WonderfulVariety> out;
    for (int n = 2; n <= max_n; ++n) {
        out.push_back(wv::make_irreducible(wv::get_entry(Family::case_9b, n)));
        out.push_back(wv::make_irreducible(wv::get_entry(Family::case_9c, n)));
    }
    out.push_back(wv::make_irreducible(wv::get_entry(Family::case_15)));
    return out;
}

std::vector<Weight> pic_plus_weights(const WonderfulVariety& x, std::int64_t cap) {
    std::vector<Weight> out;
    const std::size_t rank = x.ambient().rank();
    Weight w = Weight::zero(rank);
    while (true) {
        if (wv::pic_plus_contains(x, w)) out.push_back(w);
        std::size_t pos = rank;
        while (pos > 0 && w[pos - 1] == cap) --pos;
        if (pos == 0) break;
        ++w[pos - 1];
        for (std::size_t k = pos; k < rank; ++k) w[k] = 0;
    }
    return out;
}

} // namespace

TEST_CASE("admissible-m bound") {
    for (std::int64_t p : {0, 1, 4, 6}) {
        const auto x = wv::make_irreducible(wv::get_entry(Family::case_9b, 2));
        CHECK(wv::m_bound(x, Weight({p, 0})) == p);
    }
    const auto g2 = wv::make_irreducible(wv::get_entry(Family::case_15));
    for (std::int64_t p : {0, 2})
        for (std::int64_t q : {0, 1, 5}) CHECK(wv::m_bound(g2, Weight({p, q})) == q);

    CHECK(wv::m_bound(g2, Weight::zero(2)) == 0);

    SECTION("errors") {
        const auto p1 = wv::make_irreducible(wv::get_entry(Family::p1xp1));
        CHECK_THROWS_AS(wv::m_bound(p1, Weight({2})), wv::unsupported_path_error);
        CHECK_THROWS_AS(wv::m_bound(g2, Weight({-1, 0})), std::domain_error);
        const auto b2 = wv::make_irreducible(wv::get_entry(Family::case_9b, 2));
        CHECK_THROWS_AS(wv::m_bound(b2, Weight({0, 1})), std::domain_error); // not in pic+
    }
}

TEST_CASE("section-space decomposition") {
    SECTION("9B(3), lambda = 2 omega_1") {
        const auto x = wv::make_irreducible(wv::get_entry(Family::case_9b, 3));
        const auto dec = wv::decompose(x, Weight({2, 0, 0}));
        REQUIRE(dec.summands.size() == 3);
        CHECK(dec.summands[0].head == Weight({2, 0, 0}));
        CHECK(dec.summands[0].dim == 27);
        CHECK(dec.summands[1].head == Weight({1, 0, 0}));
        CHECK(dec.summands[1].dim == 7);
        CHECK(dec.summands[2].head == Weight({0, 0, 0}));
        CHECK(dec.summands[2].dim == 1);
        CHECK(dec.total_dim == 35);
    }

    SECTION("15, lambda = omega_2") {
        const auto x = wv::make_irreducible(wv::get_entry(Family::case_15));
        const auto dec = wv::decompose(x, Weight({0, 1}));
        REQUIRE(dec.summands.size() == 2);
        CHECK(dec.summands[0].head == Weight({0, 1}));
        CHECK(dec.summands[0].dim == 14);
        CHECK(dec.summands[1].head == Weight({1, 0}));
        CHECK(dec.summands[1].dim == 7);
        CHECK(dec.total_dim == 21);
    }

    SECTION("zero weight decomposes as the trivial module") {
        for (const auto& x : catalog_varieties(4)) {
            const auto dec = wv::decompose(x, Weight::zero(x.ambient().rank()));
            REQUIRE(dec.summands.size() == 1);
            CHECK(dec.summands[0].m == 0);
            CHECK(dec.summands[0].head.is_zero());
            CHECK(dec.summands[0].dim == 1);
            CHECK(dec.total_dim == 1);
        }
    }

    SECTION("m values are gapless, heads dominant and strictly decreasing") {
        for (const auto& x : catalog_varieties(4)) {
            for (const auto& lambda : pic_plus_weights(x, 3)) {
                const auto dec = wv::decompose(x, lambda);
                BigInt total = 0;
                for (std::size_t k = 0; k < dec.summands.size(); ++k) {
                    CHECK(dec.summands[k].m == static_cast<std::int64_t>(k));
                    CHECK(wv::is_dominant(x.ambient(), dec.summands[k].head));
                    total += dec.summands[k].dim;
                    if (k > 0) {
                        // difference of consecutive heads is gamma, a positive root
                        CHECK(dec.summands[k - 1].head - dec.summands[k].head == *x.gamma());
                    }
                }
                CHECK(total == dec.total_dim);
            }
        }
    }
}

TEST_CASE("interval property: brute-force dominance scan matches the closed form") {
    for (const auto& x : catalog_varieties(6)) {
        const RootSystem& rs = x.ambient();
        for (const auto& lambda : pic_plus_weights(x, 6)) {
            const std::int64_t bound = wv::m_bound(x, lambda);
            const Weight star = wv::weight_star(rs, lambda);
            for (std::int64_t m = 0; m <= bound + 5; ++m) {
                const bool dominant = wv::is_dominant(rs, star - m * *x.gamma());
                CHECK(dominant == (m <= bound));
            }
        }
    }
}

TEST_CASE("bound additivity on the catalog families") {
    for (const auto& x : catalog_varieties(4)) {
        const auto weights = pic_plus_weights(x, 3);
        for (const auto& u : weights)
            for (const auto& v : weights)
                CHECK(wv::m_bound(x, u + v) == wv::m_bound(x, u) + wv::m_bound(x, v));
    }
}

TEST_CASE("induced varieties: the bound only sees the Levi part") {
    const auto x = wv::make_induced(RootSystem(Kind::B, 4), {2, 3, 4},
                                    wv::get_entry(Family::case_9b, 3), {2, 3, 4});
    for (std::int64_t p = 0; p <= 4; ++p) {
        for (std::int64_t a = 0; a <= 4; ++a) {
            // lambda = a omega_1 + p omega_2: off-Levi part a omega_1 is inert.
            CHECK(wv::m_bound(x, Weight({a, p, 0, 0})) == p);
        }
    }
}

TEST_CASE("P1xP1 section dimensions") {
    const RootSystem a1(Kind::A, 1);
    CHECK(wv::dim_sections_p1xp1(a1, Weight::zero(1), 1, 1) == 4);
    for (std::int64_t k = 0; k <= 4; ++k)
        for (std::int64_t l = 0; l <= 4; ++l)
            CHECK(wv::dim_sections_p1xp1(a1, Weight::zero(1), k, l) == (k + 1) * (l + 1));

    const RootSystem a2(Kind::A, 2);
    CHECK(wv::dim_sections_p1xp1(a2, Weight({1, 0}), 2, 0) == 9); // dim V_{omega_2} = 3

    CHECK_THROWS_AS(wv::dim_sections_p1xp1(a1, Weight::zero(1), -1, 0), std::domain_error);
    CHECK_THROWS_AS(wv::dim_sections_p1xp1(a2, Weight({-1, 0}), 0, 0), std::domain_error);
}
