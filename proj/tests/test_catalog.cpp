#include <catch2/catch_amalgamated.hpp>

#include "wv/catalog.hpp"

using wv::CatalogEntry;
using wv::Family;
using wv::Kind;
using wv::Treatment;
using wv::Weight;

TEST_CASE("built-in entries") {
    SECTION("9B(n): Spin(2n+1), gamma = omega_1") {
        const CatalogEntry e = wv::get_entry(Family::case_9b, 2);
        CHECK(e.group.kind() == Kind::B);
        CHECK(e.group.rank() == 2);
        CHECK(*e.gamma == Weight({1, 0}));
        REQUIRE(e.pic_generators.size() == 1);
        CHECK(e.pic_generators[0] == Weight({1, 0}));
        CHECK(e.treatment == Treatment::interval_splitting);
        CHECK(e.picard_rank == 1);
    }

    SECTION("9C(n): Sp(2n), gamma = omega_2") {
        const CatalogEntry e = wv::get_entry(Family::case_9c, 3);
        CHECK(e.group.kind() == Kind::C);
        CHECK(*e.gamma == Weight({0, 1, 0}));
        CHECK(e.pic_generators[0] == Weight({0, 1, 0}));
    }

    SECTION("15: G2, gamma = omega_2 - omega_1") {
        const CatalogEntry e = wv::get_entry(Family::case_15);
        CHECK(e.group.kind() == Kind::G);
        CHECK(*e.gamma == Weight({-1, 1}));
        REQUIRE(e.pic_generators.size() == 2);
        CHECK(e.pic_generators[0] == Weight({1, 0}));
        CHECK(e.pic_generators[1] == Weight({0, 1}));
        CHECK(e.picard_rank == 2);
    }

    SECTION("P1xP1: SL2, Picard rank 2, no spherical-root treatment") {
        const CatalogEntry e = wv::get_entry(Family::p1xp1);
        CHECK(e.group.kind() == Kind::A);
        CHECK(e.group.rank() == 1);
        CHECK_FALSE(e.gamma.has_value());
        CHECK(e.picard_rank == 2);
        CHECK(e.treatment == Treatment::p1xp1_special);
    }

    SECTION("flag entries from user data") {
        const CatalogEntry e =
            wv::make_flag_entry(wv::RootSystem(Kind::A, 3),
                                {Weight({1, 0, 0}), Weight({0, 0, 1})});
        CHECK(e.treatment == Treatment::borel_weil);
        CHECK(e.picard_rank == 2);
        CHECK_THROWS_AS(wv::make_flag_entry(wv::RootSystem(Kind::A, 2),
                                            {Weight({1, 0}), Weight({2, 0})}),
                        wv::structural_error); // dependent generators
        CHECK_THROWS_AS(wv::make_flag_entry(wv::RootSystem(Kind::A, 2), {Weight({-1, 0})}),
                        wv::structural_error); // non-dominant generator
    }

    SECTION("errors") {
        CHECK_THROWS_AS(wv::get_entry(Family::case_9b, 1), std::domain_error);
        CHECK_THROWS_AS(wv::get_entry(Family::case_9c, 0), std::domain_error);
        CHECK_THROWS_AS(wv::family_from_string("nope"), wv::lookup_error);
        CHECK_THROWS_AS(wv::get_entry(Family::flag), wv::lookup_error);
    }

    SECTION("deterministic") {
        const CatalogEntry a = wv::get_entry(Family::case_9b, 4);
        const CatalogEntry b = wv::get_entry(Family::case_9b, 4);
        CHECK(a.gamma == b.gamma);
        CHECK(a.pic_generators == b.pic_generators);
        CHECK(a.label == b.label);
    }
}

TEST_CASE("spherical roots pair positively with exactly one simple coroot, value 1") {
    std::vector<CatalogEntry> entries;
    for (int n = 2; n <= 6; ++n) {
        entries.push_back(wv::get_entry(Family::case_9b, n));
        entries.push_back(wv::get_entry(Family::case_9c, n));
    }
    entries.push_back(wv::get_entry(Family::case_15));
    for (const auto& e : entries) {
        REQUIRE(e.gamma.has_value());
        int positive = 0;
        for (std::size_t k = 0; k < e.group.rank(); ++k) {
            if ((*e.gamma)[k] > 0) {
                ++positive;
                CHECK((*e.gamma)[k] == 1);
            }
        }
        CHECK(positive == 1);
    }
}

TEST_CASE("pic+ membership is the nonnegative span of the generators") {
    const CatalogEntry b2 = wv::get_entry(Family::case_9b, 2);
    CHECK(wv::pic_plus_contains(b2, Weight({3, 0})));
    CHECK_FALSE(wv::pic_plus_contains(b2, Weight({0, 1})));
    CHECK_FALSE(wv::pic_plus_contains(b2, Weight({-1, 0})));
    CHECK(wv::pic_plus_contains(b2, Weight({0, 0})));

    const CatalogEntry g2 = wv::get_entry(Family::case_15);
    CHECK(wv::pic_plus_contains(g2, Weight({2, 5})));
    CHECK_FALSE(wv::pic_plus_contains(g2, Weight({-1, 2})));

    const CatalogEntry p = wv::get_entry(Family::p1xp1);
    CHECK(wv::pic_plus_contains(p, Weight({4})));
    CHECK_FALSE(wv::pic_plus_contains(p, Weight({-2})));

    SECTION("closed under addition") {
        for (const auto& e : {b2, g2}) {
            std::vector<Weight> members;
            // all members with coordinates <= 3
            std::vector<std::int64_t> c(e.group.rank(), 0);
            const std::int64_t cap = 3;
            while (true) {
                Weight w{std::vector<std::int64_t>(c)};
                if (wv::pic_plus_contains(e, w)) members.push_back(w);
                std::size_t p2 = c.size();
                while (p2 > 0 && c[p2 - 1] == cap) --p2;
                if (p2 == 0) break;
                ++c[p2 - 1];
                for (std::size_t k = p2; k < c.size(); ++k) c[k] = 0;
            }
            for (const auto& u : members)
                for (const auto& v : members) CHECK(wv::pic_plus_contains(e, u + v));
        }
    }
}
