#include "flagcoh/weyl.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace flagcoh;

namespace {

Weight random_weight(std::mt19937& rng, int rank, Int lo, Int hi) {
    std::uniform_int_distribution<Int> coord(lo, hi);
    Weight w = Weight::zero(rank);
    for (int j = 0; j < rank; ++j) w.c[j] = coord(rng);
    return w;
}

WeylElement random_element(std::mt19937& rng, const RootSystem& rs, int len) {
    std::vector<int> raw;
    for (int k = 0; k < len; ++k) raw.push_back(static_cast<int>(rng() % rs.rank));
    return from_word(rs, raw);
}

}  // namespace

TEST_CASE("linear and dot actions", "[weyl]") {
    auto a1 = build_root_system(CartanType::parse("A1"));
    WeylElement s = from_word(a1, {0});
    CHECK(act(a1, s, Weight{3}) == Weight{-3});
    CHECK(dot(a1, s, Weight{3}) == Weight{-5});

    WeylElement e;
    CHECK(act(a1, e, Weight{7}) == Weight{7});
    CHECK(dot(a1, e, Weight{7}) == Weight{7});

    auto a2 = build_root_system(CartanType::parse("A2"));
    WeylElement s1 = from_word(a2, {0});
    CHECK(act(a2, s1, Weight{1, 0}) == Weight{-1, 1});
}

TEST_CASE("dot action is a group action", "[weyl]") {
    std::mt19937 rng(7101);
    for (const auto& name : {"A2", "B2", "A3"}) {
        auto rs = build_root_system(CartanType::parse(name));
        for (int trial = 0; trial < 40; ++trial) {
            WeylElement w = random_element(rng, rs, 5);
            WeylElement v = random_element(rng, rs, 5);
            Weight la = random_weight(rng, rs.rank, -8, 8);
            CHECK(dot(rs, w, dot(rs, v, la)) == dot(rs, compose(rs, w, v), la));
        }
    }
}

TEST_CASE("dominant dot conjugate", "[weyl]") {
    auto a1 = build_root_system(CartanType::parse("A1"));

    auto b = dominant_dot_conjugate(a1, -a1.rho);
    CHECK(b.singular);

    b = dominant_dot_conjugate(a1, Weight{-3});
    REQUIRE_FALSE(b.singular);
    CHECK(b.degree == 1);
    CHECK(b.dominant == Weight{1});
    CHECK(b.witness == from_word(a1, {0}));
    CHECK(dot(a1, b.witness, b.dominant) == Weight{-3});

    b = dominant_dot_conjugate(a1, Weight{5});
    CHECK_FALSE(b.singular);
    CHECK(b.degree == 0);
    CHECK(b.witness.is_identity());
    CHECK(b.dominant == Weight{5});
}

TEST_CASE("dominant dot conjugate: witness properties over a box", "[weyl]") {
    for (const auto& name : {"A2", "B2"}) {
        auto rs = build_root_system(CartanType::parse(name));
        for (Int x = -5; x <= 5; ++x) {
            for (Int y = -5; y <= 5; ++y) {
                Weight la{x, y};
                auto b = dominant_dot_conjugate(rs, la);
                // singular exactly when some positive pairing of la+rho is zero
                bool sing = !rs.is_regular(la + rs.rho);
                REQUIRE(b.singular == sing);
                if (sing) continue;
                CHECK(rs.is_dominant(b.dominant));
                CHECK(dot(rs, b.witness, b.dominant) == la);
                CHECK(b.degree == b.witness.length());
                // minimal length: one step per negative pairing of la+rho
                int neg = 0;
                for (int r = 0; r < rs.N; ++r)
                    if (rs.pairing(la + rs.rho, r) < 0) ++neg;
                CHECK(b.degree == neg);
            }
        }
    }
}

TEST_CASE("longest element", "[weyl]") {
    const std::vector<std::pair<std::string, int>> table = {
        {"A1", 1}, {"A2", 3}, {"B2", 4}, {"G2", 6}, {"A3", 6}, {"B3", 9}};
    for (const auto& [name, len] : table) {
        auto rs = build_root_system(CartanType::parse(name));
        WeylElement w0 = longest_element(rs);
        INFO(name);
        CHECK(w0.length() == len);
        CHECK(w0.length() == rs.N);
        // maps the dominant chamber to the antidominant one
        Weight img = act(rs, w0, rs.rho);
        CHECK(rs.is_antidominant(img - rs.rho));
        CHECK(img == -rs.rho);
    }
}

TEST_CASE("length complement under w0, exhaustive in rank 2", "[weyl]") {
    for (const auto& name : {"A2", "B2", "G2"}) {
        auto rs = build_root_system(CartanType::parse(name));
        WeylElement w0 = longest_element(rs);
        for (const auto& w : enumerate_weyl_group(rs))
            CHECK(compose(rs, w0, w).length() == rs.N - w.length());
    }
}

TEST_CASE("word canonicalization", "[weyl]") {
    auto a2 = build_root_system(CartanType::parse("A2"));
    CHECK(from_word(a2, {0, 0}).is_identity());
    CHECK(from_word(a2, {0, 1, 0}) == from_word(a2, {1, 0, 1}));  // braid relation
    CHECK(from_word(a2, {0, 1, 0, 1, 0, 1}).is_identity());
    CHECK(inverse(a2, from_word(a2, {0, 1})) == from_word(a2, {1, 0}));
    CHECK(compose(a2, from_word(a2, {0}), from_word(a2, {0})).is_identity());
    CHECK_THROWS_AS(from_word(a2, {2}), std::out_of_range);
}

TEST_CASE("Weyl element serialization", "[weyl]") {
    auto a2 = build_root_system(CartanType::parse("A2"));
    CHECK(WeylElement{}.str() == "e");
    CHECK(from_word(a2, {0, 1, 0}).str() == "1,2,1");
    CHECK(WeylElement::parse("1,2,1", 2).word == std::vector<int>{0, 1, 0});
    CHECK(WeylElement::parse("e", 2).is_identity());
    CHECK_THROWS_AS(WeylElement::parse("3", 2), std::invalid_argument);
    CHECK_THROWS_AS(WeylElement::parse("0", 2), std::invalid_argument);
    CHECK_THROWS_AS(WeylElement::parse("x", 2), std::invalid_argument);
}

TEST_CASE("affine reflections", "[weyl]") {
    auto a1 = build_root_system(CartanType::parse("A1"));
    // s.(-5) = 3, plus 1*3*alpha = 6
    CHECK(affine_reflect(a1, 0, 1, 3, Weight{-5}) == Weight{9});
    // r = 0 is the plain dot reflection
    CHECK(affine_reflect(a1, 0, 0, 3, Weight{-5}) == Weight{3});

    std::mt19937 rng(55021);
    for (const auto& name : {"A2", "B2"}) {
        auto rs = build_root_system(CartanType::parse(name));
        for (int trial = 0; trial < 60; ++trial) {
            Weight nu = random_weight(rng, rs.rank, -10, 10);
            int beta = static_cast<int>(rng() % rs.N);
            Int r = static_cast<Int>(rng() % 7) - 3;
            Int p = (trial % 2) ? 2 : 5;
            // involution for fixed (beta, r)
            CHECK(affine_reflect(rs, beta, r, p, affine_reflect(rs, beta, r, p, nu)) == nu);
        }
    }
}

TEST_CASE("alcove normal form", "[weyl]") {
    auto a1 = build_root_system(CartanType::parse("A1"));
    CHECK(wp_normal_form(a1, Weight{3}, 3) == Weight{1});  // 4 folds to 2
    CHECK(wp_normal_form(a1, Weight{1}, 3) == Weight{1});  // already inside
    CHECK(wp_normal_form(a1, Weight{2}, 3) == Weight{2});  // boundary accepted

    std::mt19937 rng(90317);
    for (const auto& name : {"A1", "A2", "B2", "G2"}) {
        auto rs = build_root_system(CartanType::parse(name));
        for (Int p : {2, 3, 5}) {
            for (int trial = 0; trial < 50; ++trial) {
                Weight la = random_weight(rng, rs.rank, -15, 15);
                Weight nf = wp_normal_form(rs, la, p);
                // representative lies in the closed fundamental alcove
                Weight x = nf + rs.rho;
                for (int b = 0; b < rs.N; ++b) {
                    Int t = rs.pairing(x, b);
                    CHECK(t >= 0);
                    CHECK(t <= p);
                }
                // idempotent and constant on the affine orbit
                CHECK(wp_normal_form(rs, nf, p) == nf);
                int beta = static_cast<int>(rng() % rs.N);
                Int r = static_cast<Int>(rng() % 9) - 4;
                CHECK(wp_normal_form(rs, affine_reflect(rs, beta, r, p, la), p) == nf);
            }
        }
    }
}

TEST_CASE("Weyl group enumeration", "[weyl]") {
    const std::vector<std::pair<std::string, std::size_t>> table = {
        {"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}, {"F4", 1152}};
    for (const auto& [name, order] : table) {
        auto rs = build_root_system(CartanType::parse(name));
        auto all = enumerate_weyl_group(rs);
        INFO(name);
        CHECK(all.size() == order);
        CHECK(static_cast<std::size_t>(weyl_order(rs.type)) == order);
        // identity first, longest element last
        CHECK(all.front().is_identity());
        CHECK(all.back() == longest_element(rs));
    }
}

TEST_CASE("E8 enumeration is refused", "[weyl]") {
    auto rs = build_root_system(CartanType::parse("E8"));
    CHECK(weyl_order(rs.type) == 696729600);
    CHECK_THROWS_AS(enumerate_weyl_group(rs), std::domain_error);
    // but word arithmetic stays available
    CHECK(longest_element(rs).length() == 120);
}
